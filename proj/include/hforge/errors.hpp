#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hforge {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// scalar
struct MixedRadicand : Error { using Error::Error; };
struct DivisionByZero : Error { using Error::Error; };

// finite fields / constructions
struct NotPrime : Error { using Error::Error; };
struct BadResidueClass : Error { using Error::Error; };
struct BadParameters : Error { using Error::Error; };
struct NotNormalized : Error { using Error::Error; };
struct NotSymmetric : Error { using Error::Error; };
struct NotADesign : Error { using Error::Error; };

// chm / invariants
struct UnknownFixture : Error { using Error::Error; };
struct Singular : Error { using Error::Error; };

struct BudgetExceeded : Error {
    std::uint64_t completed = 0;
    std::uint64_t total = 0;
    BudgetExceeded(std::uint64_t done, std::uint64_t all, const std::string& what)
        : Error(what), completed(done), total(all) {}
};

} // namespace hforge
