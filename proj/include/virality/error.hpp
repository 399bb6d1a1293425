#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace virality {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input record. Carries the 1-based line number and the offending
// field (empty when the whole line is unparseable).
class ParseError : public Error {
 public:
  ParseError(std::string path, std::size_t line, std::string field,
             const std::string& what)
      : Error(path + ":" + std::to_string(line) +
              (field.empty() ? std::string() : " field '" + field + "'") +
              ": " + what),
        path_(std::move(path)),
        line_(line),
        field_(std::move(field)) {}

  const std::string& path() const noexcept { return path_; }
  std::size_t line() const noexcept { return line_; }
  const std::string& field() const noexcept { return field_; }

 private:
  std::string path_;
  std::size_t line_;
  std::string field_;
};

// Broken cross-record reference (orphan comment, dangling parent, cycle).
class ReferenceError : public Error {
 public:
  ReferenceError(std::string id, const std::string& what)
      : Error(what), id_(std::move(id)) {}
  const std::string& id() const noexcept { return id_; }

 private:
  std::string id_;
};

class DuplicateIdError : public Error {
 public:
  explicit DuplicateIdError(std::string id)
      : Error("duplicate id '" + id + "'"), id_(std::move(id)) {}
  const std::string& id() const noexcept { return id_; }

 private:
  std::string id_;
};

// Invalid argument or configuration value; names the field.
class ParameterError : public Error {
 public:
  ParameterError(std::string field, const std::string& what)
      : Error(field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

class LookupError : public Error {
 public:
  using Error::Error;
};

class CapacityError : public Error {
 public:
  CapacityError(std::size_t required, std::size_t available)
      : Error("negative pool holds " + std::to_string(available) +
              " ids but " + std::to_string(required) + " are required"),
        required_(required),
        available_(available) {}
  std::size_t required() const noexcept { return required_; }
  std::size_t available() const noexcept { return available_; }

 private:
  std::size_t required_;
  std::size_t available_;
};

class TrainingError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

}  // namespace virality
