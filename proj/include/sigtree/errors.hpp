#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/rational.hpp>

namespace sigtree {

using Rational = boost::rational<std::int64_t>;

// Domain errors. The CLI maps every sigtree::Error except ParseError to
// exit code 1; ParseError maps to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ArgumentError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class NotProlongable : public ConfigError {
 public:
  explicit NotProlongable(std::string letter)
      : ConfigError("morphism is not prolongable on letter '" + letter + "'"),
        letter_(std::move(letter)) {}
  const std::string& letter() const noexcept { return letter_; }

 private:
  std::string letter_;
};

class InvalidSignature : public Error {
 public:
  explicit InvalidSignature(std::size_t index)
      : Error("invalid signature: partial sum condition fails at j=" +
              std::to_string(index)),
        index_(index) {}
  InvalidSignature(std::size_t index, const std::string& what)
      : Error(what), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class InvalidLabelling : public Error {
 public:
  explicit InvalidLabelling(std::size_t block)
      : Error("invalid labelling: block " + std::to_string(block) +
              " is not strictly increasing"),
        block_(block) {}
  std::size_t block() const noexcept { return block_; }

 private:
  std::size_t block_;
};

class StructureError : public Error {
 public:
  using Error::Error;
};

class AlphabetError : public Error {
 public:
  using Error::Error;
};

class LengthMismatch : public Error {
 public:
  explicit LengthMismatch(std::string letter)
      : Error("label image and morphism image differ in length for letter '" +
              letter + "'"),
        letter_(std::move(letter)) {}
  const std::string& letter() const noexcept { return letter_; }

 private:
  std::string letter_;
};

class NonIntegerGrowthRatio : public Error {
 public:
  explicit NonIntegerGrowthRatio(Rational ratio)
      : Error("growth ratio " + std::to_string(ratio.numerator()) + "/" +
              std::to_string(ratio.denominator()) + " is not an integer"),
        ratio_(ratio) {}
  Rational ratio() const noexcept { return ratio_; }

 private:
  Rational ratio_;
};

class NonIncreasingImage : public Error {
 public:
  explicit NonIncreasingImage(std::string letter)
      : Error("label image of '" + letter + "' is not strictly increasing"),
        letter_(std::move(letter)) {}
  const std::string& letter() const noexcept { return letter_; }

 private:
  std::string letter_;
};

class FiniteLanguage : public Error {
 public:
  FiniteLanguage() : Error("automaton accepts a finite language") {}
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace sigtree
