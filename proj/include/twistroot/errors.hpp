#pragma once

#include <stdexcept>
#include <string>

namespace twistroot {

// Base class for all failures raised by the toolkit. Everything proper code
// can recover from derives from this; plain logic errors stay asserts.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A generator index exceeds the ambient free-group rank.
class RankViolation : public Error {
public:
  explicit RankViolation(const std::string& what) : Error(what) {}
};

// Two operands live in free groups of different ranks.
class RankMismatch : public Error {
public:
  explicit RankMismatch(const std::string& what) : Error(what) {}
};

// A construction needs a larger rank / strand count / genus than given.
class UnsupportedRank : public Error {
public:
  explicit UnsupportedRank(const std::string& what) : Error(what) {}
};

// A computation exceeded its configured letter or size budget.
class ResourceLimit : public Error {
public:
  explicit ResourceLimit(const std::string& what) : Error(what) {}
};

// A polygon gluing is invalid or describes a non-orientable surface.
class UnsupportedGluing : public Error {
public:
  explicit UnsupportedGluing(const std::string& what) : Error(what) {}
};

// Claimed data fails its defining equations (e.g. a non-inverse pair).
class ConstructionInconsistency : public Error {
public:
  explicit ConstructionInconsistency(const std::string& what) : Error(what) {}
};

// No witness exists within the searched arrangement space.
class ConstructionGap : public Error {
public:
  explicit ConstructionGap(const std::string& what) : Error(what) {}
};

// Malformed textual input (word, braid word, matrix or fixture grammar).
class ParseError : public Error {
public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

// Matrix shape or argument dimensions do not fit the operation.
class DimensionMismatch : public Error {
public:
  explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

}  // namespace twistroot
