#include "condalg/generators.hpp"

#include <algorithm>
#include <set>

namespace condalg {

const char* gen_kind_name(GenKind k) {
  switch (k) {
    case GenKind::Exhaustive: return "exhaustive";
    case GenKind::RandomTable: return "random-table";
    case GenKind::FromFrame: return "from-frame";
    case GenKind::StrictImplication: return "strict-implication-family";
    case GenKind::Projection: return "projection-family";
  }
  throw InputError("unknown generator kind");
}

GenKind parse_gen_kind(const std::string& name) {
  if (name == "exhaustive") return GenKind::Exhaustive;
  if (name == "random-table") return GenKind::RandomTable;
  if (name == "from-frame") return GenKind::FromFrame;
  if (name == "strict-implication-family" || name == "strict-implication")
    return GenKind::StrictImplication;
  if (name == "projection-family" || name == "projection")
    return GenKind::Projection;
  throw InputError("unknown generator kind: " + name);
}

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw ContractError("draw from an empty range");
  return rng() % bound;
}

namespace {

void add_upset(std::set<Triple>& triples, int x, PointSet gen, int y,
               PointSet full) {
  for (PointSet Z = gen;; Z = (Z + 1) | gen) {
    triples.insert({x, Z, y});
    if (Z == full) break;
  }
}

std::set<Triple> close_upward(std::set<Triple> S, PointSet full) {
  std::vector<Triple> base(S.begin(), S.end());
  for (const Triple& t : base) add_upset(S, t.x, t.mid, t.y, full);
  return S;
}

// Horn closures; each pass re-establishes upward closure, iterated to a
// fixpoint.  id picks the rule: 4, 7 or 8.
std::set<Triple> horn_closure(std::set<Triple> S, int points, int rule) {
  const PointSet full = (PointSet{1} << points) - 1;
  bool changed = true;
  while (changed) {
    const std::size_t before = S.size();
    S = close_upward(std::move(S), full);
    std::vector<Triple> cur(S.begin(), S.end());
    if (rule == 8) {
      std::vector<PointSet> img_full(static_cast<std::size_t>(points), 0);
      for (const Triple& t : cur)
        img_full[static_cast<std::size_t>(t.x)] |= PointSet{1} << t.y;
      for (const Triple& t : cur) {
        const PointSet guard =
            img_full[static_cast<std::size_t>(t.x)] & t.mid;
        add_upset(S, t.x, guard, t.y, full);
      }
    } else {
      for (const Triple& a : cur)
        for (const Triple& b : cur) {
          if (rule == 4 && a.y == b.x) S.insert({a.x, b.mid, b.y});
          if (rule == 7 && a.x == b.x) S.insert({a.y, b.mid, b.y});
        }
    }
    changed = S.size() != before;
  }
  return S;
}

std::set<Triple> random_upset_triples(int points, std::mt19937_64& rng) {
  const PointSet full = (PointSet{1} << points) - 1;
  std::set<Triple> S;
  for (int x = 0; x < points; ++x)
    for (int y = 0; y < points; ++y) {
      const std::uint64_t k = draw(rng, 3);
      for (std::uint64_t i = 0; i < k; ++i)
        add_upset(S, x, static_cast<PointSet>(draw(rng, full + 1)), y, full);
    }
  return S;
}

}  // namespace

TFrame random_upward_closed_frame(int points, int flavor,
                                  std::mt19937_64& rng) {
  if (points < 0 || points > TFrame::kMaxPoints)
    throw InputError("point count out of range");
  if (points == 0) return TFrame(0, {});
  const PointSet full = (PointSet{1} << points) - 1;
  std::set<Triple> S;
  switch (flavor) {
    case 0:
      S = random_upset_triples(points, rng);
      break;
    case 1: {
      const int x = static_cast<int>(draw(rng, points));
      const int y = static_cast<int>(draw(rng, points));
      add_upset(S, x, static_cast<PointSet>(draw(rng, full + 1)), y, full);
      break;
    }
    case 2:
      for (int x = 0; x < points; ++x)
        for (int y = 0; y < points; ++y)
          add_upset(S, x, static_cast<PointSet>(draw(rng, full + 1)), y,
                    full);
      break;
    case 3:
      // Membership frame: T(x,Z,y) iff y in Z.  Satisfies every frame
      // condition in the canonicity family.
      for (int x = 0; x < points; ++x)
        for (int y = 0; y < points; ++y)
          add_upset(S, x, PointSet{1} << y, y, full);
      break;
    case 4:
      S = horn_closure(random_upset_triples(points, rng), points, 4);
      break;
    case 5:
      S = horn_closure(random_upset_triples(points, rng), points, 7);
      break;
    case 6:
      S = horn_closure(random_upset_triples(points, rng), points, 8);
      break;
    case 7: {
      // Generated from a random ternary S: T(x,K,z) iff K meets the
      // witness set {y : S(x,y,z)}.  Nonempty middles and the singleton
      // witness property hold by construction.
      for (int x = 0; x < points; ++x)
        for (int z = 0; z < points; ++z) {
          PointSet wit = 0;
          for (int y = 0; y < points; ++y)
            if (draw(rng, 2) == 1) wit |= PointSet{1} << y;
          for (int y = 0; y < points; ++y)
            if (wit >> y & 1) add_upset(S, x, PointSet{1} << y, z, full);
        }
      break;
    }
    default:
      throw InputError("unknown frame flavor");
  }
  std::vector<Triple> triples(S.begin(), S.end());
  TFrame f(points, std::move(triples));
  return f;
}

std::vector<TFrame> all_upward_closed_frames(int points) {
  if (points < 0 || points > 2)
    throw InputError("exhaustive frame enumeration is capped at 2 points");
  if (points == 0) return {TFrame(0, {})};
  const PointSet nmasks = PointSet{1} << points;
  std::vector<std::vector<PointSet>> upsets;  // as lists of member masks
  for (std::uint32_t S = 0; S < (std::uint32_t{1} << nmasks); ++S) {
    bool up = true;
    for (PointSet Z = 0; Z < nmasks && up; ++Z) {
      if (!(S >> Z & 1)) continue;
      for (PointSet W = 0; W < nmasks; ++W)
        if ((Z & W) == Z && !(S >> W & 1)) {
          up = false;
          break;
        }
    }
    if (!up) continue;
    std::vector<PointSet> members;
    for (PointSet Z = 0; Z < nmasks; ++Z)
      if (S >> Z & 1) members.push_back(Z);
    upsets.push_back(std::move(members));
  }
  const int pairs = points * points;
  std::vector<std::size_t> pick(static_cast<std::size_t>(pairs), 0);
  std::vector<TFrame> out;
  for (;;) {
    std::vector<Triple> triples;
    for (int p = 0; p < pairs; ++p) {
      const int x = p / points;
      const int y = p % points;
      for (PointSet Z : upsets[pick[static_cast<std::size_t>(p)]])
        triples.push_back({x, Z, y});
    }
    out.emplace_back(points, std::move(triples));
    int p = pairs - 1;
    while (p >= 0 && pick[static_cast<std::size_t>(p)] + 1 == upsets.size())
      pick[static_cast<std::size_t>(p--)] = 0;
    if (p < 0) break;
    ++pick[static_cast<std::size_t>(p)];
  }
  return out;
}

CondAlg random_row_algebra(int atoms, bool want_c1, bool want_c3,
                           std::mt19937_64& rng) {
  const FinBoolAlg B(atoms);
  const Elem N = B.size();
  const Elem top = B.top();
  // Antecedent-indexed coatom values; the antitone coupling meets each
  // value into its covers' values, which is exactly C3.
  std::vector<std::vector<Elem>> v(static_cast<std::size_t>(atoms),
                                   std::vector<Elem>(N, top));
  std::vector<Elem> w(N, top);
  for (Elem a = 0; a < N; ++a) {
    if (!want_c1) {
      w[a] = static_cast<Elem>(draw(rng, N));
      if (want_c3)
        for (int j = 0; j < atoms; ++j)
          if (a >> j & 1) w[a] &= w[a ^ (Elem{1} << j)];
    }
    for (int i = 0; i < atoms; ++i) {
      Elem val = static_cast<Elem>(draw(rng, N));
      if (want_c3)
        for (int j = 0; j < atoms; ++j)
          if (a >> j & 1) val &= v[i][a ^ (Elem{1} << j)];
      v[i][a] = val;
    }
  }
  std::vector<Elem> table;
  table.reserve(static_cast<std::size_t>(N) * N);
  for (Elem a = 0; a < N; ++a)
    for (Elem b = 0; b < N; ++b) {
      Elem val = w[a];
      for (int i = 0; i < atoms; ++i)
        if (B.leq(b, top ^ (Elem{1} << i))) val &= v[i][a];
      table.push_back(val);
    }
  return CondAlg(B, std::move(table));
}

CondAlg random_uniform_algebra(int atoms, std::mt19937_64& rng) {
  const FinBoolAlg B(atoms);
  const Elem N = B.size();
  std::vector<Elem> table;
  table.reserve(static_cast<std::size_t>(N) * N);
  for (std::size_t i = 0; i < static_cast<std::size_t>(N) * N; ++i)
    table.push_back(static_cast<Elem>(draw(rng, N)));
  return CondAlg(B, std::move(table));
}

CondAlg random_kernel_algebra(int atoms, std::mt19937_64& rng) {
  const FinBoolAlg B(atoms);
  const Elem N = B.size();
  std::set<Elem> kernel = {B.top()};
  const std::uint64_t extra = draw(rng, static_cast<std::uint64_t>(atoms) + 2);
  for (std::uint64_t i = 0; i < extra; ++i)
    kernel.insert(static_cast<Elem>(draw(rng, N)));
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<Elem> cur(kernel.begin(), kernel.end());
    for (Elem x : cur)
      for (Elem y : cur)
        if (kernel.insert(x & y).second) grew = true;
  }
  std::vector<Elem> table;
  table.reserve(static_cast<std::size_t>(N) * N);
  for (Elem a = 0; a < N; ++a)
    for (Elem b = 0; b < N; ++b) {
      Elem val = 0;
      for (Elem x : kernel)
        if ((x & a & ~b) == 0) val |= x;
      table.push_back(val & B.top());
    }
  return CondAlg(B, std::move(table));
}

CondAlg random_from_frame_algebra(int atoms, std::mt19937_64& rng) {
  const int flavor = static_cast<int>(draw(rng, kFrameFlavors));
  return cm(random_upward_closed_frame(atoms, flavor, rng));
}

CondAlg random_projection_algebra(int atoms, std::mt19937_64& rng) {
  const FinBoolAlg B(atoms);
  return proj_algebra(atoms, static_cast<Elem>(draw(rng, B.size())));
}

namespace {

bool has_axiom(const std::vector<AxiomId>& ids, AxiomId id) {
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

bool candidate_passes(const CondAlg& A, const std::vector<AxiomId>& require,
                      const std::vector<AxiomId>& forbid) {
  for (AxiomId id : require)
    if (!check_axiom(A, id).holds) return false;
  for (AxiomId id : forbid)
    if (check_axiom(A, id).holds) return false;
  return true;
}

void exhaustive_small(int atoms, const std::vector<AxiomId>& require,
                      const std::vector<AxiomId>& forbid, std::size_t limit,
                      std::vector<CondAlg>& out) {
  const FinBoolAlg B(atoms);
  const Elem N = B.size();
  const std::size_t cells = static_cast<std::size_t>(N) * N;
  std::vector<Elem> table(cells, 0);
  for (;;) {
    CondAlg cand(B, table);
    if (candidate_passes(cand, require, forbid)) {
      out.push_back(std::move(cand));
      if (out.size() >= limit) return;
    }
    std::size_t i = cells;
    while (i > 0 && table[i - 1] + 1 == N) table[--i] = 0;
    if (i == 0) return;
    ++table[i - 1];
  }
}

void exhaustive_two(const std::vector<AxiomId>& require,
                    const std::vector<AxiomId>& forbid, std::size_t limit,
                    std::vector<CondAlg>& out) {
  const FinBoolAlg B(2);
  const Elem N = B.size();
  const Elem top = B.top();
  // All C1+C2 rows, lexicographically sorted.
  std::set<std::vector<Elem>> rowset;
  for (Elem v0 = 0; v0 < N; ++v0)
    for (Elem v1 = 0; v1 < N; ++v1) {
      std::vector<Elem> row(N, top);
      for (Elem b = 0; b < N; ++b) {
        if (B.leq(b, top ^ 1)) row[b] &= v0;
        if (B.leq(b, top ^ 2)) row[b] &= v1;
      }
      rowset.insert(std::move(row));
    }
  const std::vector<std::vector<Elem>> rows(rowset.begin(), rowset.end());
  const bool prune_c3 = has_axiom(require, AxiomId::C3);
  std::vector<const std::vector<Elem>*> chosen(N, nullptr);
  auto rec = [&](auto&& self, Elem a) -> bool {
    if (a == N) {
      std::vector<Elem> table;
      table.reserve(static_cast<std::size_t>(N) * N);
      for (Elem x = 0; x < N; ++x)
        table.insert(table.end(), chosen[x]->begin(), chosen[x]->end());
      CondAlg cand(B, std::move(table));
      if (candidate_passes(cand, require, forbid)) {
        out.push_back(std::move(cand));
        if (out.size() >= limit) return true;
      }
      return false;
    }
    for (const std::vector<Elem>& row : rows) {
      if (prune_c3) {
        bool ok = true;
        for (int j = 0; j < 2 && ok; ++j) {
          if (!(a >> j & 1)) continue;
          const std::vector<Elem>& above = *chosen[a ^ (Elem{1} << j)];
          for (Elem b = 0; b < N; ++b)
            if ((row[b] & above[b]) != row[b]) {
              ok = false;
              break;
            }
        }
        if (!ok) continue;
      }
      chosen[a] = &row;
      if (self(self, a + 1)) return true;
    }
    return false;
  };
  rec(rec, 0);
}

}  // namespace

std::vector<CondAlg> search(const GenSpec& spec,
                            const std::vector<AxiomId>& require,
                            const std::vector<AxiomId>& forbid,
                            std::size_t limit) {
  if (spec.atoms < 0 || spec.atoms > FinBoolAlg::kMaxAtoms)
    throw InputError("atom count out of range");
  std::vector<CondAlg> out;
  if (limit == 0) return out;
  if (spec.kind == GenKind::Exhaustive) {
    if (spec.atoms > 2)
      throw InputError("exhaustive search is capped at 2 atoms");
    if (spec.atoms <= 1) {
      exhaustive_small(spec.atoms, require, forbid, limit, out);
    } else {
      if (!has_axiom(require, AxiomId::C1) ||
          !has_axiom(require, AxiomId::C2))
        throw InputError(
            "exhaustive search at 2 atoms needs C1 and C2 required");
      exhaustive_two(require, forbid, limit, out);
    }
    return out;
  }
  std::mt19937_64 rng(spec.seed);
  const std::size_t attempts = 400 * (limit + 1);
  for (std::size_t i = 0; i < attempts && out.size() < limit; ++i) {
    CondAlg cand = [&] {
      switch (spec.kind) {
        case GenKind::RandomTable:
          if (has_axiom(require, AxiomId::C2))
            return random_row_algebra(spec.atoms,
                                      has_axiom(require, AxiomId::C1),
                                      has_axiom(require, AxiomId::C3), rng);
          return random_uniform_algebra(spec.atoms, rng);
        case GenKind::FromFrame:
          return random_from_frame_algebra(spec.atoms, rng);
        case GenKind::StrictImplication:
          return random_kernel_algebra(spec.atoms, rng);
        case GenKind::Projection:
          return random_projection_algebra(spec.atoms, rng);
        default:
          throw InputError("unknown generator kind");
      }
    }();
    if (candidate_passes(cand, require, forbid)) out.push_back(std::move(cand));
  }
  return out;
}

}  // namespace condalg
