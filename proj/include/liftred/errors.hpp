#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace liftred {

/// Base of every error raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SyntaxError : Error {
    SyntaxError(const std::string &what, std::size_t pos)
        : Error(what + " at position " + std::to_string(pos)), position(pos) {}
    std::size_t position;
};

struct UnknownSymbol : Error {
    explicit UnknownSymbol(const std::string &name)
        : Error("unknown symbol '" + name + "'"), symbol(name) {}
    std::string symbol;
};

struct MissingAssignment : Error {
    explicit MissingAssignment(const std::string &name)
        : Error("no value assigned to '" + name + "'"), symbol(name) {}
    std::string symbol;
};

struct KindMismatch : Error {
    using Error::Error;
};

struct ChartMismatch : Error {
    using Error::Error;
};

struct DegreeError : Error {
    using Error::Error;
};

struct NameCollision : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct NotPoisson : Error {
    using Error::Error;
};

struct UnverifiedInput : Error {
    using Error::Error;
};

struct NotSymplecticAction : Error {
    NotSymplecticAction(const std::string &what, std::size_t generator_index,
                        std::string lie_derivative)
        : Error(what + "; L_X omega = " + lie_derivative), generator(generator_index),
          residual(std::move(lie_derivative)) {}
    std::size_t generator;
    std::string residual;
};

struct ParametrizationNotInLevelSet : Error {
    using Error::Error;
};

struct UnknownCatalogEntry : Error {
    using Error::Error;
};

/// Structurally invalid input (non-antisymmetric constants, singular matrices, ...).
struct InvalidInput : Error {
    using Error::Error;
};

} // namespace liftred
