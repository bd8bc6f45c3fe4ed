#pragma once

#include <stdexcept>
#include <string>

namespace weyl {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

struct PoleAtPoint : Error {
    explicit PoleAtPoint(const std::string& what) : Error("pole at evaluation point: " + what) {}
};

struct ParseError : Error {
    size_t pos;
    ParseError(const std::string& what, size_t p)
        : Error("parse error at " + std::to_string(p) + ": " + what), pos(p) {}
};

struct SubstitutionLeavesRing : Error {
    explicit SubstitutionLeavesRing(const std::string& what)
        : Error("substitution leaves ring: " + what) {}
};

struct DegreeCapExceeded : Error {
    explicit DegreeCapExceeded(int cap)
        : Error("degree cap exceeded (cap " + std::to_string(cap) + ")") {}
};

struct WindowEmpty : Error {
    WindowEmpty() : Error("empty index window") {}
};

struct HypothesisUnverified : Error {
    explicit HypothesisUnverified(const std::string& what)
        : Error("hypothesis unverified: " + what) {}
};

struct ZeroU0 : Error {
    ZeroU0() : Error("orbit variable acts as zero; not a chain-type weight") {}
};

struct InvalidCut : Error {
    explicit InvalidCut(const std::string& what) : Error("invalid cut: " + what) {}
};

struct NotInM : Error {
    explicit NotInM(const std::string& what) : Error("weight not in the chain set: " + what) {}
};

struct NotChainType : Error {
    explicit NotChainType(const std::string& what) : Error("not chain-type: " + what) {}
};

struct NotSimple : Error {
    explicit NotSimple(const std::string& what) : Error("module is not simple: " + what) {}
};

struct UNotInvertible : Error {
    UNotInvertible() : Error("u does not act invertibly") {}
};

struct UnsupportedShape : Error {
    explicit UnsupportedShape(const std::string& what) : Error("unsupported shape: " + what) {}
};

struct NoStabilization : Error {
    explicit NoStabilization(const std::string& what) : Error("no stabilization: " + what) {}
};

struct InvalidDescriptor : Error {
    explicit InvalidDescriptor(const std::string& what)
        : Error("invalid stratum descriptor: " + what) {}
};

struct RelationFailure : Error {
    explicit RelationFailure(const std::string& what) : Error("relation failure: " + what) {}
};

struct InstanceMismatch : Error {
    InstanceMismatch() : Error("operands belong to different algebra instances") {}
};

} // namespace weyl
