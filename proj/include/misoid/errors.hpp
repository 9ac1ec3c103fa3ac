#ifndef MISOID_ERRORS_HPP
#define MISOID_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace misoid {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad configuration or malformed input files (CLI exit code 2).
class InputError : public Error {
public:
    using Error::Error;
};

/// The data could not be identified, e.g. no unity-eigenvalue cluster
/// (CLI exit code 3).
class IdentificationError : public Error {
public:
    using Error::Error;
};

/// A Monte-Carlo study failed as a whole (CLI exit code 4).
class StudyError : public Error {
public:
    using Error::Error;
};

/// IPCA did not converge; carries the last variance iterate.
class NonConvergenceError : public IdentificationError {
public:
    NonConvergenceError(const std::string& msg, std::vector<double> last)
        : IdentificationError(msg), last_iterate(std::move(last)) {}

    std::vector<double> last_iterate;
};

}  // namespace misoid

#endif
