#ifndef GRADCAL_ERRORS_HPP
#define GRADCAL_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gradcal {

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Depth is zero, negative, or non-finite where a strictly positive value is required.
class InvalidDepthError : public Error {
  public:
    using Error::Error;
};

// A 3-D point with z <= 0 was handed to a perspective projection.
class BehindCameraError : public Error {
  public:
    using Error::Error;
};

class DimensionMismatchError : public Error {
  public:
    using Error::Error;
};

class InvalidParameterError : public Error {
  public:
    using Error::Error;
};

// No valid pixel survived masking; the loss is undefined.
class EmptyMaskError : public Error {
  public:
    using Error::Error;
};

class EmptyBatchError : public Error {
  public:
    using Error::Error;
};

class EmptyDatasetError : public Error {
  public:
    using Error::Error;
};

// A synthetic scene left some camera ray without a positive-depth hit.
class DegenerateSceneError : public Error {
  public:
    using Error::Error;
};

// File parsing failure; carries the path and the byte offset of the problem.
class ParseError : public Error {
  public:
    ParseError(const std::string &path, std::size_t offset, const std::string &what)
        : Error(path + ": byte " + std::to_string(offset) + ": " + what), path_(path), offset_(offset) {}

    const std::string &path() const { return path_; }
    std::size_t offset() const { return offset_; }

  private:
    std::string path_;
    std::size_t offset_;
};

} // namespace gradcal

#endif
