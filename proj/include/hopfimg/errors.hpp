/*
   Copyright 2026 The hopfimg Authors

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

#ifndef HOPFIMG_ERRORS_HPP
#define HOPFIMG_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hopfimg {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define HOPFIMG_DEFINE_ERROR(Name)                                  \
  class Name : public Error {                                       \
   public:                                                          \
    explicit Name(const std::string& what) : Error(#Name, what) {} \
  };

HOPFIMG_DEFINE_ERROR(DivisionByZero)
HOPFIMG_DEFINE_ERROR(ContextMismatch)
HOPFIMG_DEFINE_ERROR(DimensionMismatch)
HOPFIMG_DEFINE_ERROR(ShapeMismatch)
HOPFIMG_DEFINE_ERROR(NotAHopfIdeal)
HOPFIMG_DEFINE_ERROR(InvalidRepresentation)
HOPFIMG_DEFINE_ERROR(NotClosed)
HOPFIMG_DEFINE_ERROR(NotGroupLike)
HOPFIMG_DEFINE_ERROR(NotATwist)
HOPFIMG_DEFINE_ERROR(NotInvertible)
HOPFIMG_DEFINE_ERROR(NotACocycle)
HOPFIMG_DEFINE_ERROR(NotSurjective)
HOPFIMG_DEFINE_ERROR(HostMismatch)
HOPFIMG_DEFINE_ERROR(InvalidTable)
HOPFIMG_DEFINE_ERROR(IndexOutOfRange)
HOPFIMG_DEFINE_ERROR(MissingCharacterTable)
HOPFIMG_DEFINE_ERROR(WrongOrder)
HOPFIMG_DEFINE_ERROR(OrderMismatch)
HOPFIMG_DEFINE_ERROR(NotAnNthRoot)
HOPFIMG_DEFINE_ERROR(FormatError)

#undef HOPFIMG_DEFINE_ERROR

/// Syntax error in the scalar grammar, with the offending character offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error("ParseError", what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace hopfimg

#endif  // HOPFIMG_ERRORS_HPP
