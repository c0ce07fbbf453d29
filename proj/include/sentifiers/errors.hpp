#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sentifiers {

// Every engine failure derives from Error. message() is user-facing,
// detail() is for logs and scripted clients.
class Error : public std::runtime_error {
 public:
  Error(std::string message, std::string detail = {})
      : std::runtime_error(message), detail_(std::move(detail)) {}

  std::string message() const { return what(); }
  const std::string& detail() const { return detail_; }

 private:
  std::string detail_;
};

class IngestError : public Error {
 public:
  IngestError(std::size_t row, const std::string& reason)
      : Error("could not read the data file: " + reason,
              "row " + std::to_string(row) + ": " + reason),
        row_(row) {}

  std::size_t row() const { return row_; }

 private:
  std::size_t row_;
};

class SchemaError : public Error {
 public:
  using Error::Error;
};

class StatsError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class CorpusError : public Error {
 public:
  CorpusError(std::size_t line_no, const std::string& reason)
      : Error("n-gram corpus is invalid: " + reason,
              "line " + std::to_string(line_no) + ": " + reason),
        line_no_(line_no) {}

  std::size_t line_no() const { return line_no_; }

 private:
  std::size_t line_no_;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class UnintelligibleQuery : public Error {
 public:
  using Error::Error;
};

class NoCooccurrence : public Error {
 public:
  using Error::Error;
};

class NotSupported : public Error {
 public:
  using Error::Error;
};

class DegenerateRange : public Error {
 public:
  explicit DegenerateRange(const std::string& attribute)
      : Error("the default range for '" + attribute + "' is empty",
              "degenerate range for " + attribute),
        attribute_(attribute) {}

  const std::string& attribute() const { return attribute_; }

 private:
  std::string attribute_;
};

class RefineError : public Error {
 public:
  using Error::Error;
};

class NotFound : public Error {
 public:
  using Error::Error;
};

class Conflict : public Error {
 public:
  using Error::Error;
};

}  // namespace sentifiers
