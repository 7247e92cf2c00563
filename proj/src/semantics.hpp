#pragma once

#include <optional>
#include <string_view>

namespace abaf {

/// PRF is the subset-maximal complete variant; classical maximal-admissible
/// preferred is only available from the oracle.
enum class Semantics { Adm, Com, Prf, Grd, Stb };

inline constexpr Semantics kAllSemantics[] = {Semantics::Adm, Semantics::Com, Semantics::Prf, Semantics::Grd,
                                              Semantics::Stb};

inline std::string_view to_string(Semantics s) {
    switch (s) {
        case Semantics::Adm: return "adm";
        case Semantics::Com: return "com";
        case Semantics::Prf: return "prf";
        case Semantics::Grd: return "grd";
        case Semantics::Stb: return "stb";
    }
    return "?";
}

inline std::optional<Semantics> parse_semantics(std::string_view s) {
    for (Semantics sem : kAllSemantics)
        if (to_string(sem) == s) return sem;
    return std::nullopt;
}

}  // namespace abaf
