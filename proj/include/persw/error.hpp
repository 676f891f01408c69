#pragma once

#include <stdexcept>
#include <string>

namespace persw {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad argument: dimension mismatch, out-of-range parameter, malformed input.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// A filtration where some face enters after one of its cofaces.
class NonMonotoneFiltration : public Error {
public:
    using Error::Error;
};

/// The Grassmannian projection is undefined: the eigen-gap at position d vanishes.
class MedialAxisError : public Error {
public:
    using Error::Error;
};

/// No weak simplicial approximation was found within the subdivision budget.
class SubdivisionLimitError : public Error {
public:
    SubdivisionLimitError(const std::string& what, int subdivisions, double t)
        : Error(what), subdivisions_(subdivisions), t_(t) {}

    int subdivisions() const noexcept { return subdivisions_; }
    double t() const noexcept { return t_; }

private:
    int subdivisions_;
    double t_;
};

}  // namespace persw
