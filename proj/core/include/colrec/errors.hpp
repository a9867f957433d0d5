#ifndef COLREC_ERRORS_HPP
#define COLREC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace colrec {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A caller violated a documented precondition or type invariant.
class ContractViolation : public Error {
public:
    explicit ContractViolation(const std::string& what) : Error(what) {}
};

/// Input matrix is numerically rank deficient.
class RankDeficient : public Error {
public:
    RankDeficient(const std::string& what, double sigma_min)
        : Error(what), sigma_min(sigma_min) {}
    double sigma_min;
};

/// A per-column (or per-row) least-squares design matrix is singular.
/// `index` identifies the offending column/row within its block.
class SingularDesign : public Error {
public:
    SingularDesign(const std::string& what, int index, double sigma_min)
        : Error(what), index(index), sigma_min(sigma_min) {}
    int index;
    double sigma_min;
};

/// Smooth orthonormalization exhausted its noise schedule without reaching
/// the coherence target.
class CoherenceUnreachable : public Error {
public:
    CoherenceUnreachable(const std::string& what, double coherence)
        : Error(what), coherence(coherence) {}
    double coherence;
};

/// Deterministic subset selection could not make progress even after
/// jittered restarts.
class SubsetSelectionStalled : public Error {
public:
    explicit SubsetSelectionStalled(const std::string& what) : Error(what) {}
};

/// Malformed CSV input; `line` is the 1-based offending line number.
class CsvError : public Error {
public:
    CsvError(const std::string& what, long line) : Error(what), line(line) {}
    long line;
};

}  // namespace colrec

#endif
