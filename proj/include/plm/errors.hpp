#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace plm {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  DimensionMismatch(std::size_t lhs, std::size_t rhs)
      : Error("dimension mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)),
        lhs_(lhs),
        rhs_(rhs) {}
  std::size_t lhs() const noexcept { return lhs_; }
  std::size_t rhs() const noexcept { return rhs_; }

 private:
  std::size_t lhs_;
  std::size_t rhs_;
};

/// A dense matrix is not a PLM. `column` is 1-based; `count` is the number
/// of ones found there (or the offending entry when it is not 0/1).
class NotPlm : public Error {
 public:
  NotPlm(std::size_t column, long long count, const std::string& why)
      : Error("not a PLM: column " + std::to_string(column) + ": " + why),
        column_(column),
        count_(count) {}
  std::size_t column() const noexcept { return column_; }
  long long count() const noexcept { return count_; }

 private:
  std::size_t column_;
  long long count_;
};

class NotCplm : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class NotLeftStochastic : public Error {
 public:
  NotLeftStochastic(std::size_t column, std::string column_sum, const std::string& why)
      : Error("not left stochastic: column " + std::to_string(column) + ": " + why),
        column_(column),
        column_sum_(std::move(column_sum)) {}
  /// 1-based, 0 when the failure is not tied to a column.
  std::size_t column() const noexcept { return column_; }
  const std::string& column_sum() const noexcept { return column_sum_; }

 private:
  std::size_t column_;
  std::string column_sum_;
};

class ZeroColumn : public Error {
 public:
  explicit ZeroColumn(std::size_t column)
      : Error("column " + std::to_string(column) + " has no strictly positive entry"),
        column_(column) {}
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

class WeightSumNotOne : public Error {
 public:
  using Error::Error;
};

class RootFindingFailure : public Error {
 public:
  using Error::Error;
};

/// Malformed text input. `line` is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace plm
