#pragma once

#include <stdexcept>
#include <string>
#include <variant>

#include "gcb/cochain.hpp"
#include "gcb/crossed_monoid.hpp"
#include "gcb/gcrossed.hpp"
#include "gcb/graymonoid.hpp"

namespace gcb {

inline constexpr const char* kFormatVersion = "1.0";

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SchemaVersionMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Payload = std::variant<FiniteGroup, Cochain, AbelianThreeCocycle, GCrossedPointedCategory, PointedGrayMonoid,
                             GCrossedMonoid, GCrossedFunctor>;

struct Document {
    std::string format_version = kFormatVersion;
    Payload body;

    std::string kind() const;
    bool operator==(const Document& o) const { return format_version == o.format_version && body == o.body; }
};

std::string to_text(const Document& d);
Document from_text(const std::string& text);
Document load(const std::string& path);
void save(const Document& d, const std::string& path);

}  // namespace gcb
