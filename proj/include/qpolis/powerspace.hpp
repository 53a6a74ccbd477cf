#pragma once

#include <cstdint>
#include <vector>

#include "qpolis/copres.hpp"
#include "qpolis/finite_ops.hpp"
#include "qpolis/posite.hpp"

namespace qpolis {

/// Lower powerspace F(X) presented through coideals of a basic posite for X.
/// On finite models the denotation of `copres` bijects with the closed sets
/// of X via F -> {U in the basis : F cap U nonempty}.
struct PowerspaceHandle {
  FiniteSpace x;
  BasicPosite base;
  Copresentation copres;  // coidl_space(base.posite)
};

/// Basic posite over the minimal basis {up(x)}; carrier order is inclusion.
PowerspaceHandle powerspace(const FiniteSpace& x);
PowerspaceHandle powerspace(const FiniteSpace& x, const std::vector<PointSet>& basis);

/// f_U: closed set of X -> coideal mask over the carrier, and back.
std::uint64_t closed_to_coideal(const PowerspaceHandle& h, PointSet closed);
PointSet coideal_to_closed(const PowerspaceHandle& h, std::uint64_t coideal);

/// Dia of an arbitrary open, expanded through the basis: the indices of all
/// basis members inside it.
OpenCode dia_code(const PowerspaceHandle& h, PointSet open_set);

/// Pi^0_2 relations carving the image of the canonical embedding
/// down: x -> closure{x} out of F(X): nonemptiness plus binary-intersection
/// reflection; on finite models the denotation is exactly the irreducible
/// closed sets.
std::vector<Pi02Relation> down_copres(const PowerspaceHandle& h);

/// y -> f^{-1}(closure{y}) as a map into lower_powerspace(source); checks its
/// continuity, equates it with is_essential, and verifies the preimage
/// identity (preimage of Dia U is the saturation of f(U)).
struct EssentialReport {
  bool essential = false;
  bool map_continuous = false;
  Report report;
};

EssentialReport essential_check_via_powerspace(const FiniteMap& f);

/// Asserts f^{-1}(closure{y}) = closure(f^{-1}(y)) for every y. Requires a
/// continuous open map; with `allow_non_open` the openness precondition is
/// skipped so the inequality can be witnessed on non-open maps.
Report openmap_fiber_closure_check(const FiniteMap& f, bool allow_non_open = false);

/// The open-surjection theorem's embedding y -> closure(f^{-1}(y)) into F(X)
/// together with its three-condition Pi^0_2 definition, verified exhaustively
/// against the embedding's image on the coideal model.
struct OpenSurjEmbedding {
  std::vector<std::uint64_t> image;          // coideal mask per target point
  std::vector<Pi02Relation> conditions;      // over the powerspace carrier
  std::vector<std::uint64_t> condition_set;  // denotation of the conditions
  Report report;
};

OpenSurjEmbedding open_surj_embedding(const FiniteMap& f);

}  // namespace qpolis
