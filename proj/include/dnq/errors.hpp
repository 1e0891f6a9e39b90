#pragma once

#include <stdexcept>
#include <string>

namespace dnq {

struct NotDivisible : std::runtime_error {
    explicit NotDivisible(const std::string& what) : std::runtime_error(what) {}
};

struct NotARoot : std::runtime_error {
    explicit NotARoot(const std::string& what) : std::runtime_error(what) {}
};

struct OutOfCategory : std::runtime_error {
    explicit OutOfCategory(const std::string& what) : std::runtime_error(what) {}
};

struct NoSplitting : std::runtime_error {
    explicit NoSplitting(const std::string& what) : std::runtime_error(what) {}
};

struct NonIntegralResult : std::runtime_error {
    explicit NonIntegralResult(const std::string& what) : std::runtime_error(what) {}
};

struct BadParameter : std::runtime_error {
    explicit BadParameter(const std::string& what) : std::runtime_error(what) {}
};

struct BadReduction : std::runtime_error {
    explicit BadReduction(const std::string& what) : std::runtime_error(what) {}
};

struct NonIntegralInterpolation : std::runtime_error {
    explicit NonIntegralInterpolation(const std::string& what) : std::runtime_error(what) {}
};

struct InconsistentLabels : std::runtime_error {
    explicit InconsistentLabels(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace dnq
