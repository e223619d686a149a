#ifndef BRW_ERRORS_HPP
#define BRW_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace brw {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Law validation
struct NotAProbability : Error { using Error::Error; };
struct NotCritical : Error { using Error::Error; };
struct ZeroVariance : Error { using Error::Error; };
struct NonzeroMean : Error { using Error::Error; };
struct SpanNotOne : Error { using Error::Error; };

// Tree sampling
struct VertexCapExceeded : Error {
    std::uint64_t partial_total;
    explicit VertexCapExceeded(std::uint64_t partial)
        : Error("vertex cap exceeded after " + std::to_string(partial) + " vertices"),
          partial_total(partial) {}
};
struct IncompatibleSize : Error { using Error::Error; };
struct RejectionBudgetExceeded : Error { using Error::Error; };

// Ensemble
struct EmptyEnsemble : Error { using Error::Error; };
struct GridMisaligned : Error { using Error::Error; };
struct NotEnoughTrees : Error { using Error::Error; };

// Limit sampler
struct MissingIseSample : Error { using Error::Error; };

// Stats
struct TooFewSamples : Error { using Error::Error; };
struct NonPositiveSample : Error { using Error::Error; };
struct DegenerateTail : Error { using Error::Error; };
struct EmptySample : Error { using Error::Error; };
struct BudgetTooSmall : Error { using Error::Error; };

// IO / CLI
struct IoFailure : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };

} // namespace brw

#endif
