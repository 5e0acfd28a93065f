#pragma once

#include <stdexcept>
#include <string>

namespace progrand {

// Base class for all library errors. what() names the violated precondition.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ZeroSeed : Error { using Error::Error; };
struct WidthMismatch : Error { using Error::Error; };
struct DegreeTooLarge : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct TapOutOfRange : Error { using Error::Error; };
struct CapacityExceeded : Error { using Error::Error; };
struct ThresholdOutOfRange : Error { using Error::Error; };
struct ZeroVariance : Error { using Error::Error; };
struct LagOutOfRange : Error { using Error::Error; };
struct NoOnes : Error { using Error::Error; };
struct DegenerateDesign : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };

}  // namespace progrand
