#pragma once

#include <stdexcept>
#include <string>

namespace ringgraph {

// Ring or field would exceed the configured enumeration limit.
class SizeLimitError : public std::length_error {
 public:
  explicit SizeLimitError(const std::string& what) : std::length_error(what) {}
};

// A unital construction was requested on a ring without identity.
class NotUnitalError : public std::invalid_argument {
 public:
  explicit NotUnitalError(const std::string& what) : std::invalid_argument(what) {}
};

// Malformed ring descriptor.
class ParseError : public std::invalid_argument {
 public:
  explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

// Graph is outside the clique-join family.
class NotInFamilyError : public std::domain_error {
 public:
  explicit NotInFamilyError(const std::string& what) : std::domain_error(what) {}
};

// Neither the family decomposition nor the small-graph search applies.
class UndecidedError : public std::domain_error {
 public:
  explicit UndecidedError(const std::string& what) : std::domain_error(what) {}
};

// Element map failed ring-morphism validation.
class MorphismError : public std::invalid_argument {
 public:
  explicit MorphismError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace ringgraph
