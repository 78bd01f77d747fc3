// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace boundlab {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimMismatch : Error { using Error::Error; };
struct BadIndex : Error { using Error::Error; };
struct NotHermitian : Error { using Error::Error; };
struct BadGate : Error { using Error::Error; };
struct NonUnitaryGate : Error { using Error::Error; };
struct BadParams : Error { using Error::Error; };
struct SchmidtFailure : Error { using Error::Error; };
struct MissingSetting : Error { using Error::Error; };
struct NegativeProbability : Error { using Error::Error; };
struct IllConditioned : Error { using Error::Error; };
struct TooLarge : Error { using Error::Error; };

}  // namespace boundlab
