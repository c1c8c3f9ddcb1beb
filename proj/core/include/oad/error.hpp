// Copyright 2026 The oadeval Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef OAD_ERROR_HPP_
#define OAD_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace oad {

// Failure categories surfaced by the library. The CLI maps these onto exit
// codes; library users can switch on kind() without parsing messages.
enum class ErrorKind {
  kParse,        // malformed input syntax (line/offset in the message)
  kFormat,       // binary/CSV score payload violates its declared header
  kReference,    // unknown video, class, flag, or missing score track
  kValidation,   // a record violates a dataset invariant
  kDomain,       // argument outside an operation's stated domain
  kConsistency,  // inputs disagree with each other (e.g. P mismatch)
  kCapacity,     // synthesis could not place instances within bounds
  kIo,           // underlying stream/file failure
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace oad

#endif  // OAD_ERROR_HPP_
