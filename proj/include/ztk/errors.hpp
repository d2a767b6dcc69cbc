#ifndef ZTK_ERRORS_HPP
#define ZTK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ztk {

// Base for all domain errors thrown by the library.  kind() is the stable
// machine-readable name reported by the CLI; what() carries the details.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& msg)
        : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define ZTK_DEFINE_ERROR(Name)                                        \
    class Name : public Error {                                       \
    public:                                                           \
        explicit Name(const std::string& msg) : Error(#Name, msg) {}  \
    }

ZTK_DEFINE_ERROR(InvalidInput);
ZTK_DEFINE_ERROR(InvalidCharacter);
ZTK_DEFINE_ERROR(InvalidDiscriminant);
ZTK_DEFINE_ERROR(InvalidWeight);
ZTK_DEFINE_ERROR(InvalidBranch);
ZTK_DEFINE_ERROR(DivergentIndex);
ZTK_DEFINE_ERROR(PoleError);
ZTK_DEFINE_ERROR(PrecisionError);
ZTK_DEFINE_ERROR(UnsupportedCharacter);

#undef ZTK_DEFINE_ERROR

} // namespace ztk

#endif
