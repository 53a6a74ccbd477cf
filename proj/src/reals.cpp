#include "qpolis/reals.hpp"

#include <vector>

#include "qpolis/error.hpp"

namespace qpolis {

Rat parse_rat(const std::string& s) {
  try {
    Rat q(s);
    q.canonicalize();
    require(q.get_den() != 0, "BAD_RATIONAL", "zero denominator");
    return q;
  } catch (const std::invalid_argument&) {
    fail("BAD_RATIONAL", "cannot parse rational '" + s + "'");
  }
}

std::string rat_str(const Rat& q) { return q.get_str(); }

void diag_unpair(std::uint64_t n, std::uint64_t& i, std::uint64_t& k) {
  std::uint64_t s = 0;
  while ((s + 1) * (s + 2) / 2 <= n) ++s;
  k = n - s * (s + 1) / 2;
  i = s - k;
}

Rat stern_brocot(std::uint64_t m) {
  // Path to node m+1 in the binary heap layout of the Stern-Brocot tree.
  std::uint64_t node = m + 1;
  int bits = 63;
  while (bits > 0 && !((node >> bits) & 1)) --bits;
  mpz_class ln = 0, ld = 1, rn = 1, rd = 0;  // left and right fractions
  mpz_class n = 1, d = 1;
  for (int b = bits - 1; b >= 0; --b) {
    if ((node >> b) & 1) {  // right child: mediant of current and right bound
      ln = n, ld = d;
    } else {
      rn = n, rd = d;
    }
    n = ln + rn;
    d = ld + rd;
  }
  Rat q(n, d);
  q.canonicalize();
  return q;
}

Rat rational_at(std::uint64_t j) {
  if (j == 0) return Rat(0);
  Rat r = stern_brocot((j - 1) / 2);
  return (j % 2 == 1) ? r : Rat(-r);
}

std::uint64_t rational_index(const Rat& q, std::uint64_t limit) {
  for (std::uint64_t j = 0; j < limit; ++j)
    if (rational_at(j) == q) return j;
  fail("DESK_SCALE", "rational not found within enumeration limit");
}

OpenCode reals_true_code() {
  return OpenCode::whole_space();
}

namespace {

// L_q sits at stream/copresentation index 2j, R_q at 2j+1, where j is the
// index of q in rational_at.
std::uint64_t l_index(std::uint64_t j) { return 2 * j; }
std::uint64_t r_index(std::uint64_t j) { return 2 * j + 1; }

OpenCode basic1(std::uint64_t idx) {
  return OpenCode::from_basics({BasicOpen{{idx}}});
}

// Enumerates pairs (a, b) of rational indices with rational_at(a) <
// rational_at(b); the m-th such pair in diagonal order. Linear scan keeps the
// enumeration total and deterministic; fuel-scale indices keep it cheap.
std::pair<std::uint64_t, std::uint64_t> ordered_pair_at(std::uint64_t m) {
  std::uint64_t seen = 0;
  for (std::uint64_t n = 0;; ++n) {
    std::uint64_t a, b;
    diag_unpair(n, a, b);
    if (rational_at(a) < rational_at(b)) {
      if (seen == m) return {a, b};
      ++seen;
    }
  }
}

}  // namespace

Copresentation reals_dedekind() {
  Copresentation c;
  c.domain = IndexDomain::countable();
  c.provenance = "reals_dedekind";

  // Nonemptiness of both cut halves.
  OpenCode all_l(std::function<BasicOpen(std::size_t)>(
      [](std::size_t j) { return BasicOpen{{l_index(j)}}; }));
  OpenCode all_r(std::function<BasicOpen(std::size_t)>(
      [](std::size_t j) { return BasicOpen{{r_index(j)}}; }));
  Enumerable<Pi02Relation> nonempty(std::vector<Pi02Relation>{
      {OpenCode::whole_space(), all_l, "nonempty-L"},
      {OpenCode::whole_space(), all_r, "nonempty-R"}});

  // Downward closure of L, upward closure of R: for p < q,
  // (L_q => L_p) and (R_p => R_q).
  Enumerable<Pi02Relation> down_l(std::function<Pi02Relation(std::size_t)>(
      [](std::size_t m) {
        auto [pa, qb] = ordered_pair_at(m);
        return Pi02Relation{basic1(l_index(qb)), basic1(l_index(pa)),
                            "downward-L(" + rat_str(rational_at(pa)) + "<" +
                                rat_str(rational_at(qb)) + ")"};
      }));
  Enumerable<Pi02Relation> up_r(std::function<Pi02Relation(std::size_t)>(
      [](std::size_t m) {
        auto [pa, qb] = ordered_pair_at(m);
        return Pi02Relation{basic1(r_index(pa)), basic1(r_index(qb)),
                            "upward-R(" + rat_str(rational_at(pa)) + "<" +
                                rat_str(rational_at(qb)) + ")"};
      }));

  // Roundedness: (L_p => exists q > p with L_q), and dually for R.
  Enumerable<Pi02Relation> round_l(std::function<Pi02Relation(std::size_t)>(
      [](std::size_t j) {
        Rat p = rational_at(j);
        OpenCode above(std::function<BasicOpen(std::size_t)>([p](std::size_t m) {
          std::uint64_t seen = 0;
          for (std::uint64_t k = 0;; ++k)
            if (rational_at(k) > p) {
              if (seen == m) return BasicOpen{{l_index(k)}};
              ++seen;
            }
        }));
        return Pi02Relation{basic1(l_index(j)), above, "rounded-L(" + rat_str(p) + ")"};
      }));
  Enumerable<Pi02Relation> round_r(std::function<Pi02Relation(std::size_t)>(
      [](std::size_t j) {
        Rat p = rational_at(j);
        OpenCode below(std::function<BasicOpen(std::size_t)>([p](std::size_t m) {
          std::uint64_t seen = 0;
          for (std::uint64_t k = 0;; ++k)
            if (rational_at(k) < p) {
              if (seen == m) return BasicOpen{{r_index(k)}};
              ++seen;
            }
        }));
        return Pi02Relation{basic1(r_index(j)), below, "rounded-R(" + rat_str(p) + ")"};
      }));

  // Disjointness: L_p and R_p never both hold; the consequent is the empty
  // code, so a confirmed antecedent is a definite violation.
  Enumerable<Pi02Relation> disjoint(std::function<Pi02Relation(std::size_t)>(
      [](std::size_t j) {
        return Pi02Relation{
            OpenCode::from_basics({BasicOpen{{l_index(j), r_index(j)}}}),
            OpenCode::empty_code(), "disjoint(" + rat_str(rational_at(j)) + ")"};
      }));

  // Locatedness: for p < q, every point satisfies L_p or R_q.
  Enumerable<Pi02Relation> located(std::function<Pi02Relation(std::size_t)>(
      [](std::size_t m) {
        auto [pa, qb] = ordered_pair_at(m);
        return Pi02Relation{
            OpenCode::whole_space(),
            OpenCode::from_basics({BasicOpen{{l_index(pa)}}, BasicOpen{{r_index(qb)}}}),
            "located(" + rat_str(rational_at(pa)) + "<" + rat_str(rational_at(qb)) +
                ")"};
      }));

  c.relations = Enumerable<Pi02Relation>::round_robin(
      {nonempty, down_l, up_r, round_l, round_r, disjoint, located});
  return c;
}

std::uint64_t dedekind_left_index(std::uint64_t rational_j) { return l_index(rational_j); }
std::uint64_t dedekind_right_index(std::uint64_t rational_j) { return r_index(rational_j); }

}  // namespace qpolis
