#ifndef MMS_ERRORS_HPP
#define MMS_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mms
{

// Base of every domain error raised by the library. The CLI maps these to
// exit code 1.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class DimensionError : public Error
{
public:
    using Error::Error;
};

class InvalidDiagram : public Error
{
public:
    using Error::Error;
};

class InvalidPartition : public Error
{
public:
    using Error::Error;
};

class NotAnInnerCorner : public Error
{
public:
    using Error::Error;
};

class BoxNotInDiagram : public Error
{
public:
    using Error::Error;
};

class EmptyDiagram : public Error
{
public:
    using Error::Error;
};

class NotCofinite : public Error
{
public:
    using Error::Error;
};

class NotSupportedIdeal : public Error
{
public:
    using Error::Error;
};

class VariableMismatch : public Error
{
public:
    using Error::Error;
};

class InvalidPair : public Error
{
public:
    using Error::Error;
};

class InvalidRange : public Error
{
public:
    using Error::Error;
};

class InconsistentValues : public Error
{
public:
    using Error::Error;
};

class ResourceLimit : public Error
{
public:
    using Error::Error;
};

class UnknownVariable : public Error
{
public:
    using Error::Error;
};

class ParseError : public Error
{
public:
    ParseError(const std::string &what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), m_position(position)
    {
    }

    std::size_t position() const noexcept
    {
        return m_position;
    }

private:
    std::size_t m_position;
};

} // namespace mms

#endif
