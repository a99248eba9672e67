#ifndef RULEQA_ERRORS_HPP
#define RULEQA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ruleqa {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class FormatError : public Error {
public:
  using Error::Error;
};

class EmptyFile : public Error {
public:
  using Error::Error;
};

class SchemaError : public Error {
public:
  using Error::Error;
};

class OffsetError : public Error {
public:
  using Error::Error;
};

class MissingLexicon : public Error {
public:
  using Error::Error;
};

class DimensionMismatch : public Error {
public:
  using Error::Error;
};

class EmptyQuestion : public Error {
public:
  using Error::Error;
};

class EmptyContext : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  using Error::Error;
};

class AllZeroCounts : public Error {
public:
  using Error::Error;
};

class ConfigError : public Error {
public:
  using Error::Error;
};

}  // namespace ruleqa

#endif
