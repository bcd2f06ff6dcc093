// Copyright 2026 The hardyq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hardyq {

/// Base class for all domain errors. `name()` is the stable identifier
/// printed by the command-line tool on the diagnostic stream.
class Error : public std::runtime_error {
  public:
    Error(std::string_view name, const std::string &what)
        : std::runtime_error(what), name_(name) {}

    [[nodiscard]] std::string_view name() const noexcept { return name_; }

  private:
    std::string_view name_;
};

#define HARDYQ_DEFINE_ERROR(Type)                                             \
    class Type : public Error {                                               \
      public:                                                                 \
        explicit Type(const std::string &what) : Error(#Type, what) {}        \
    }

HARDYQ_DEFINE_ERROR(DimensionMismatch);
HARDYQ_DEFINE_ERROR(UnknownLabel);
HARDYQ_DEFINE_ERROR(InvalidState);
HARDYQ_DEFINE_ERROR(InvalidObservable);
HARDYQ_DEFINE_ERROR(InvalidScenario);
HARDYQ_DEFINE_ERROR(InvalidQVector);
HARDYQ_DEFINE_ERROR(MalformedMeasure);
HARDYQ_DEFINE_ERROR(NotEntangled);
HARDYQ_DEFINE_ERROR(MaximallyEntangled);
HARDYQ_DEFINE_ERROR(NoSolution);
HARDYQ_DEFINE_ERROR(NoCrossing);
HARDYQ_DEFINE_ERROR(InvalidArgument);
HARDYQ_DEFINE_ERROR(ParseError);

#undef HARDYQ_DEFINE_ERROR

} // namespace hardyq
