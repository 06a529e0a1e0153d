#pragma once

#include <stdexcept>
#include <string>

namespace kq {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotHermitian : Error {
    double max_deviation;
    explicit NotHermitian(double dev)
        : Error("matrix is not Hermitian, max deviation " + std::to_string(dev)),
          max_deviation(dev) {}
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct ConvergenceFailure : Error {
    using Error::Error;
};

struct EmptySpan : Error {
    using Error::Error;
};

struct PoleProximity : Error {
    std::size_t atom_index;
    explicit PoleProximity(std::size_t idx)
        : Error("evaluation point too close to measure atom " + std::to_string(idx)),
          atom_index(idx) {}
};

struct ZeroDenominator : Error {
    using Error::Error;
};

struct SingularAtom : Error {
    using Error::Error;
};

struct SingularOnInterval : Error {
    using Error::Error;
};

struct IllConditioned : Error {
    using Error::Error;
};

struct IndexOutOfRange : Error {
    using Error::Error;
};

struct OverflowGuard : Error {
    using Error::Error;
};

struct ConfigParse : Error {
    using Error::Error;
};

struct IoFailure : Error {
    using Error::Error;
};

}  // namespace kq
