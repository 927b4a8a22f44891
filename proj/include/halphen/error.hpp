/*
   Copyright 2026 The Halphen Library Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef HALPHEN_ERROR_HPP
#define HALPHEN_ERROR_HPP

#include <stdexcept>
#include <string>

namespace halphen {

// Every user-visible failure carries a stable machine-readable code next to
// the human message; the CLI forwards both.
class Error : public std::runtime_error {
   public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

   private:
    std::string code_;
};

class PrecisionError : public Error {
   public:
    PrecisionError(int required, const std::string& what_for)
        : Error("PRECISION",
                "insufficient precision: " + what_for + " needs at least " +
                    std::to_string(required) + " known coefficients"),
          required_(required) {}

    int required() const noexcept { return required_; }

   private:
    int required_;
};

inline Error inflexional_error(const std::string& where) {
    return Error("INFLEXIONAL", "arc is inflexional within precision: " + where);
}

}  // namespace halphen

#endif
