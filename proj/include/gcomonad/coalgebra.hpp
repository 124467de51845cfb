#pragma once

// Coalgebras A -> C_k A for the three comonads, checked directly against the
// relation liftings so that nothing has to be materialized.

#include <optional>
#include <string>
#include <vector>

#include "gcomonad/ef.hpp"
#include "gcomonad/forest.hpp"
#include "gcomonad/json_io.hpp"
#include "gcomonad/pebble.hpp"
#include "gcomonad/structure.hpp"

namespace gcomonad {

using EfCoalgebra = std::vector<EfPlay>;
using PebbleCoalgebra = std::vector<PebblePlay>;

/// A modal play [w0, l1, w1, ..., lj, wj]; labels are relation indices.
struct ModalPlay {
  std::vector<Element> worlds;
  std::vector<std::size_t> labels;  // worlds.size() - 1 entries
};
/// Defined on the worlds reachable from the point; nullopt elsewhere.
using ModalCoalgebra = std::vector<std::optional<ModalPlay>>;

/// nullopt when the map is a coalgebra, else the first violated law:
/// "counit", "comultiplication", or "homomorphism".
std::optional<std::string> verify_ef_coalgebra(const Structure& a, int k, const EfCoalgebra& alpha);
std::optional<std::string> verify_pebble_coalgebra(const Structure& a, int k, const PebbleCoalgebra& alpha);
std::optional<std::string> verify_modal_coalgebra(const PointedStructure& p, int k, const ModalCoalgebra& alpha);

/// alpha(a) = the chain of predecessors of a. Throws if the height exceeds k.
EfCoalgebra forest_cover_to_ef_coalgebra(const ForestCover& f, int k);
/// Parent of a = the second to last element of alpha(a). Throws when alpha
/// is not a coalgebra.
ForestCover ef_coalgebra_to_forest_cover(const Structure& a, int k, const EfCoalgebra& alpha);

/// alpha(v) = [(p(w1), w1), ..., (p(v), v)] along the chain down to v.
PebbleCoalgebra pebble_cover_to_coalgebra(const PebbledForestCover& c);

/// [a1..aj] -> [(1, a1), ..., (j, aj)].
PebblePlay ef_to_pebble_morphism(std::span<const Element> s);
PebbleCoalgebra ef_to_pebble_coalgebra(const EfCoalgebra& alpha);

/// The unique-path coalgebra when the generated submodel is a
/// synchronization tree of height <= k.
std::optional<ModalCoalgebra> modal_coalgebra(const PointedStructure& p, int k);

/// {"comonad": ..., "k": k, "alpha": {element: play}}
json ef_coalgebra_to_json(const Structure& a, int k, const EfCoalgebra& alpha);
json pebble_coalgebra_to_json(const Structure& a, int k, const PebbleCoalgebra& alpha);
json modal_coalgebra_to_json(const Structure& a, int k, const ModalCoalgebra& alpha);
EfCoalgebra ef_coalgebra_from_json(const Structure& a, const json& j);
PebbleCoalgebra pebble_coalgebra_from_json(const Structure& a, const json& j);
ModalCoalgebra modal_coalgebra_from_json(const Structure& a, const json& j);

}  // namespace gcomonad
