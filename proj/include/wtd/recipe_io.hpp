#pragma once

#include <string>
#include <string_view>

#include "wtd/wtd2.hpp"

namespace wtd {

/**
 * Plain-text W2 recipe:
 *
 *     # comment
 *     H: x y z t              vertex names (optional; else order of first use)
 *     x-y z-t                 edges, whitespace or comma separated
 *     MVC:
 *     x,z -> vxz              one line per minimal vertex cover of H
 *     STEP3:
 *     x-z y-t
 *     HPRIME: u1 u2 u3
 *     u1-u2 u2-u3
 *     STEP4:
 *     u1-x u3-z
 *
 * H and MVC are required, the other sections optional, each at most once.
 * Cover vertices take ids after H in MVC line order. Names may not contain
 * whitespace or any of ",-:;{}>". Structural checks are left to
 * construct_w2; the parser only rejects text it cannot map to ids.
 */
W2Recipe parse_recipe(std::string_view text);

/// Inverse of parse_recipe. Vertices without a label are named by id.
std::string write_recipe(const W2Recipe& recipe);

/// True if `name` can appear in a recipe or an `--edges` list.
bool is_plain_name(std::string_view name);

}  // namespace wtd
