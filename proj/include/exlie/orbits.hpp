#pragma once

// Nilpotent-orbit fixture tables for G2 and F4 in bad characteristic, covering
// both the adjoint module g and its dual g*, together with the consistency
// checks that tie them to the rest of the library: the Springer-fiber
// dimension formula dim B = (dim Z - rank)/2, the induced-orbit dimension
// formula dim O = dim O^L + 2 dim U_P, and materialization of the table
// representatives in the Chevalley basis.  The adjoint tables go back to
// Stuhler (G2) and Holt-Spaltenstein (F4); the dual tables and the induced
// rows are shipped as versioned JSON fixtures under data/ and are re-validated
// here rather than trusted.

#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "chevalley.hpp"
#include "fixtures.hpp"
#include "grouppoints.hpp"
#include "rootsys.hpp"

namespace exlie {

// ---------------------------------------------------------------------------
// Contexts: which orbit table (adjoint or dual module, type, characteristic).

struct OrbitContext {
  bool dual = false;  // true: the dual module g*, false: the adjoint module g
  CartanType type;
  int characteristic = 0;

  std::string str() const {
    return std::string(dual ? "g*" : "g") + "," + type.str() + "," +
           std::to_string(characteristic);
  }
  bool operator==(const OrbitContext& o) const {
    return dual == o.dual && type == o.type &&
           characteristic == o.characteristic;
  }
  bool operator!=(const OrbitContext& o) const { return !(*this == o); }
};

// Parses "g*,F4,2" or "g,G2,3".
inline OrbitContext parse_orbit_context(const std::string& s) {
  auto bad = [&]() {
    return std::invalid_argument("orbit context must look like g*,F4,2 (got \"" +
                                 s + "\")");
  };
  size_t c1 = s.find(',');
  if (c1 == std::string::npos) throw bad();
  size_t c2 = s.find(',', c1 + 1);
  if (c2 == std::string::npos || s.find(',', c2 + 1) != std::string::npos)
    throw bad();
  OrbitContext ctx;
  std::string alg = s.substr(0, c1);
  if (alg == "g*")
    ctx.dual = true;
  else if (alg == "g")
    ctx.dual = false;
  else
    throw bad();
  ctx.type = CartanType::parse(s.substr(c1 + 1, c2 - c1 - 1));
  std::string ch = s.substr(c2 + 1);
  if (ch.empty() || ch.find_first_not_of("0123456789") != std::string::npos)
    throw bad();
  ctx.characteristic = std::stoi(ch);
  return ctx;
}

// ---------------------------------------------------------------------------
// Root names.  The tables write positive roots as concatenated
// coefficient-letter runs over the simple-root letters (G2: a, b; F4: p, q,
// r, s), e.g. "q2r2s" is q + 2r + 2s and "2ab" is 2a + b.

inline std::string simple_root_letters(const CartanType& t) {
  if (t.factors.size() == 1 && t.factors[0].letter == 'G') return "ab";
  if (t.factors.size() == 1 && t.factors[0].letter == 'F') return "pqrs";
  throw std::invalid_argument("root names are defined for G2 and F4 only (got " +
                              t.str() + ")");
}

inline int root_index_by_name(const RootSystem& R, const std::string& name) {
  auto unknown = [&]() {
    return std::invalid_argument("unknown root name: \"" + name + "\" in type " +
                                 R.type().str());
  };
  const std::string letters = simple_root_letters(R.type());
  std::vector<int> coords(R.rank(), 0);
  size_t i = 0;
  if (name.empty()) throw unknown();
  while (i < name.size()) {
    int coeff = 0;
    bool has_digits = false;
    while (i < name.size() && std::isdigit(static_cast<unsigned char>(name[i]))) {
      coeff = 10 * coeff + (name[i] - '0');
      ++i;
      has_digits = true;
    }
    if (!has_digits) coeff = 1;
    if (coeff <= 0 || i >= name.size()) throw unknown();
    size_t pos = letters.find(name[i]);
    if (pos == std::string::npos) throw unknown();
    coords[pos] += coeff;
    ++i;
  }
  int idx = R.index_of(coords);
  if (idx < 0 || !R.is_positive(idx)) throw unknown();
  return idx;
}

// Inverse of root_index_by_name on positive roots.
inline std::string root_name(const RootSystem& R, int idx) {
  if (idx < 0 || idx >= R.num_roots() || !R.is_positive(idx))
    throw std::invalid_argument("root_name: not a positive-root index");
  const std::string letters = simple_root_letters(R.type());
  const std::vector<int>& c = R.root(idx);
  std::string s;
  for (int i = 0; i < R.rank(); ++i) {
    if (c[i] == 0) continue;
    if (c[i] > 1) s += std::to_string(c[i]);
    s += letters[i];
  }
  return s;
}

// ---------------------------------------------------------------------------
// Records.

struct OrbitRecord {
  OrbitContext context;
  std::string label;             // Bala-Carter label, "0" for the zero orbit
  std::vector<std::string> rep;  // positive-root names; empty for the zero orbit
  int dim_z = 0;                 // dim of the centralizer of the representative
  std::string a_group;           // component group: "1", "S2", "S3", "S4"
  int dim_b = 0;                 // dim of the Springer fiber at the representative
};

struct InducedRecord {
  OrbitContext context;
  std::string ambient;     // label of the induced (ambient) orbit
  std::vector<int> levi;   // simple-root indices J of the standard Levi
  std::string levi_type;   // recognized type of the Levi, "" for the torus
  std::string levi_orbit;  // label of the Levi orbit ("0" = zero orbit)
  std::string rho;         // character label attached to the Levi orbit, "" if not recorded
  int dim_u_p = 0;         // dim of the unipotent radical of P_J
  std::string source;      // "table", "text" or "regular"
};

// Dimension of one classical Levi orbit (types B3/C3), used by
// check_induced_dims.  source "stated" rows are part of the classification
// input; source "partition" rows follow from the textbook centralizer-
// dimension formula for orthogonal/symplectic partitions in good
// characteristic, with the partition recorded so tests can recompute it.
struct LeviOrbitDim {
  std::string levi_type;
  int characteristic = 0;
  std::string orbit;
  int dim = 0;
  std::string source;
  std::vector<int> partition;
};

struct NotedCount {
  OrbitContext context;
  int count = 0;
};

struct OrbitTable {
  OrbitContext context;
  std::vector<OrbitRecord> orbits;
  std::vector<InducedRecord> induced;
};

struct OrbitFixtures {
  int version = 0;
  std::vector<OrbitTable> contexts;
  std::vector<LeviOrbitDim> levi_dims;
  std::vector<NotedCount> noted;
};

// ---------------------------------------------------------------------------
// Loading and structural validation.

inline OrbitFixtures load_orbit_fixtures(const std::string& data_dir = default_data_dir()) {
  nlohmann::json j = load_json_file(data_dir + "/orbits.json");
  auto fail = [](const std::string& msg) {
    return std::runtime_error("orbit fixture: " + msg);
  };
  OrbitFixtures fx;
  fx.version = j.at("version").get<int>();

  auto context_of = [&](const nlohmann::json& cj) {
    OrbitContext ctx;
    std::string alg = cj.at("algebra").get<std::string>();
    if (alg != "g" && alg != "g*") throw fail("algebra must be g or g*, got " + alg);
    ctx.dual = alg == "g*";
    ctx.type = CartanType::parse(cj.at("type").get<std::string>());
    ctx.characteristic = cj.at("char").get<int>();
    return ctx;
  };

  static const std::set<std::string> kAGroups = {"1", "S2", "S3", "S4"};
  for (const auto& cj : j.at("contexts")) {
    OrbitTable tab;
    tab.context = context_of(cj);
    for (const auto& prev : fx.contexts)
      if (prev.context == tab.context)
        throw fail("duplicate context " + tab.context.str());
    RootSystem R(tab.context.type);

    std::set<std::string> labels;
    for (const auto& oj : cj.at("orbits")) {
      OrbitRecord rec;
      rec.context = tab.context;
      rec.label = oj.at("label").get<std::string>();
      rec.rep = oj.at("rep").get<std::vector<std::string>>();
      rec.dim_z = oj.at("dim_z").get<int>();
      rec.a_group = oj.at("a_group").get<std::string>();
      rec.dim_b = oj.at("dim_b").get<int>();
      if (!labels.insert(rec.label).second)
        throw fail("duplicate orbit label " + rec.label + " in " + tab.context.str());
      if (!kAGroups.count(rec.a_group))
        throw fail("bad component-group tag " + rec.a_group + " on " + rec.label);
      if (rec.dim_z < R.rank() || rec.dim_b < 0)
        throw fail("bad dimensions on " + rec.label + " in " + tab.context.str());
      for (const auto& nm : rec.rep) root_index_by_name(R, nm);  // throws if unknown
      tab.orbits.push_back(std::move(rec));
    }

    for (const auto& ij : cj.at("induced")) {
      InducedRecord ir;
      ir.context = tab.context;
      ir.ambient = ij.at("ambient").get<std::string>();
      ir.levi = ij.at("levi").get<std::vector<int>>();
      ir.levi_type = ij.at("levi_type").get<std::string>();
      ir.levi_orbit = ij.at("levi_orbit").get<std::string>();
      ir.rho = ij.at("rho").get<std::string>();
      ir.dim_u_p = ij.at("dim_u_p").get<int>();
      ir.source = ij.at("source").get<std::string>();
      if (!labels.count(ir.ambient))
        throw fail("induced row names unknown ambient orbit " + ir.ambient);
      for (size_t k = 0; k < ir.levi.size(); ++k) {
        if (ir.levi[k] < 0 || ir.levi[k] >= R.rank())
          throw fail("induced row for " + ir.ambient + " has a non-simple Levi index");
        if (k > 0 && ir.levi[k] <= ir.levi[k - 1])
          throw fail("induced row for " + ir.ambient + " has unsorted Levi indices");
      }
      if (R.recognize(ir.levi).type_string() != ir.levi_type)
        throw fail("induced row for " + ir.ambient + " declares Levi type " +
                   ir.levi_type + " but J recognizes as " +
                   R.recognize(ir.levi).type_string());
      int levi_pos = static_cast<int>(R.subsystem_roots(ir.levi).size()) / 2;
      if (ir.dim_u_p != R.num_pos() - levi_pos)
        throw fail("induced row for " + ir.ambient + " declares dim U_P = " +
                   std::to_string(ir.dim_u_p) + " but J gives " +
                   std::to_string(R.num_pos() - levi_pos));
      tab.induced.push_back(std::move(ir));
    }
    fx.contexts.push_back(std::move(tab));
  }

  for (const auto& lj : j.at("levi_orbit_dims")) {
    LeviOrbitDim ld;
    ld.levi_type = lj.at("levi_type").get<std::string>();
    ld.characteristic = lj.at("char").get<int>();
    ld.orbit = lj.at("orbit").get<std::string>();
    ld.dim = lj.at("dim").get<int>();
    ld.source = lj.at("source").get<std::string>();
    if (lj.contains("partition"))
      ld.partition = lj.at("partition").get<std::vector<int>>();
    if (ld.source == "partition" && ld.partition.empty())
      throw fail("levi orbit dim " + ld.orbit + " claims partition source without a partition");
    fx.levi_dims.push_back(std::move(ld));
  }

  for (const auto& nj : j.at("noted_counts")) {
    NotedCount nc;
    nc.context = context_of(nj);
    nc.count = nj.at("count").get<int>();
    for (const auto& tab : fx.contexts)
      if (tab.context == nc.context)
        throw fail("noted count duplicates fixture context " + nc.context.str());
    fx.noted.push_back(nc);
  }
  return fx;
}

inline const OrbitTable& find_orbit_table(const OrbitFixtures& fx,
                                          const OrbitContext& ctx) {
  for (const auto& tab : fx.contexts)
    if (tab.context == ctx) return tab;
  throw std::invalid_argument("no orbit fixtures for context " + ctx.str());
}

inline std::vector<OrbitRecord> orbit_fixtures(const OrbitContext& ctx,
                                               const std::string& data_dir = default_data_dir()) {
  return find_orbit_table(load_orbit_fixtures(data_dir), ctx).orbits;
}

inline std::vector<InducedRecord> induced_fixtures(const OrbitContext& ctx,
                                                   const std::string& data_dir = default_data_dir()) {
  return find_orbit_table(load_orbit_fixtures(data_dir), ctx).induced;
}

// Orbit count recorded as a note only (no per-orbit fixtures), e.g. the
// adjoint F4 table in characteristic 2.
inline int noted_orbit_count(const OrbitContext& ctx,
                             const std::string& data_dir = default_data_dir()) {
  for (const auto& nc : load_orbit_fixtures(data_dir).noted)
    if (nc.context == ctx) return nc.count;
  throw std::invalid_argument("no noted orbit count for context " + ctx.str());
}

// ---------------------------------------------------------------------------
// Representatives.

inline FormalSum representative_sum(const RootSystem& R, const OrbitRecord& rec) {
  FormalSum s;
  for (const auto& nm : rec.rep) s.emplace_back(root_index_by_name(R, nm), 1);
  return s;
}

// Coordinates of the table representative over F, in the Chevalley basis
// (e'_gamma components in dual contexts, e_gamma in adjoint ones; the zero
// orbit materializes to the zero vector).
inline std::vector<int> representative(const Chevalley& C, const GF& F,
                                       const OrbitRecord& rec) {
  if (!(C.roots().type() == rec.context.type))
    throw std::invalid_argument("representative: record type " +
                                rec.context.type.str() +
                                " does not match the Chevalley basis type " +
                                C.roots().type().str());
  return materialize(C, F, representative_sum(C.roots(), rec));
}

// ---------------------------------------------------------------------------
// Consistency checks.

struct DimFormulaRow {
  std::string label;
  int dim_z = 0;
  int dim_b = 0;
  bool ok = false;
};

struct DimFormulaReport {
  OrbitContext context;
  int rank = 0;
  std::vector<DimFormulaRow> rows;
  bool ok = true;
};

// Verifies dim B = (dim Z - rank)/2 on every record of the context; a
// violating fixture raises immediately.
inline DimFormulaReport check_dim_formula(const OrbitContext& ctx,
                                          const std::string& data_dir = default_data_dir()) {
  DimFormulaReport rep;
  rep.context = ctx;
  rep.rank = RootSystem(ctx.type).rank();
  for (const auto& rec : orbit_fixtures(ctx, data_dir)) {
    DimFormulaRow row{rec.label, rec.dim_z, rec.dim_b, false};
    row.ok = rec.dim_z - rep.rank == 2 * rec.dim_b;
    rep.ok = rep.ok && row.ok;
    rep.rows.push_back(row);
    if (!row.ok)
      throw std::runtime_error("orbit fixture error: dim B != (dim Z - rank)/2 for " +
                               rec.label + " in " + ctx.str() + " (dim Z = " +
                               std::to_string(rec.dim_z) + ", dim B = " +
                               std::to_string(rec.dim_b) + ", rank = " +
                               std::to_string(rep.rank) + ")");
  }
  return rep;
}

struct InducedDimRow {
  OrbitContext context;
  std::string ambient;
  std::string levi_type;
  std::string levi_orbit;
  int ambient_dim = -1;  // dim of the ambient orbit, dim G - dim Z
  int levi_dim = -1;     // dim of the Levi orbit, -1 when no fixture covers it
  int dim_u_p = 0;
  std::string status;  // "ok", "skipped" or "mismatch"
};

struct InducedDimReport {
  std::vector<InducedDimRow> rows;
  int checked = 0;
  int skipped = 0;
  bool ok = true;  // no mismatches among the checked rows
};

// Verifies dim O = dim O^L + 2 dim U_P on every induced row whose Levi orbit
// dimension is available (zero orbits are dimension 0; classical B3/C3 orbits
// come from the levi_orbit_dims fixture); rows without a known Levi dimension
// are listed as skipped, never guessed.
inline InducedDimReport check_induced_dims(const std::string& data_dir = default_data_dir()) {
  OrbitFixtures fx = load_orbit_fixtures(data_dir);
  InducedDimReport rep;
  for (const auto& tab : fx.contexts) {
    RootSystem R(tab.context.type);
    int dim_g = R.num_roots() + R.rank();
    for (const auto& ir : tab.induced) {
      InducedDimRow row;
      row.context = tab.context;
      row.ambient = ir.ambient;
      row.levi_type = ir.levi_type;
      row.levi_orbit = ir.levi_orbit;
      row.dim_u_p = ir.dim_u_p;
      for (const auto& o : tab.orbits)
        if (o.label == ir.ambient) row.ambient_dim = dim_g - o.dim_z;
      if (ir.levi_orbit == "0") {
        row.levi_dim = 0;
      } else {
        for (const auto& ld : fx.levi_dims)
          if (ld.levi_type == ir.levi_type &&
              ld.characteristic == tab.context.characteristic &&
              ld.orbit == ir.levi_orbit)
            row.levi_dim = ld.dim;
      }
      if (row.levi_dim < 0) {
        row.status = "skipped";
        ++rep.skipped;
      } else {
        ++rep.checked;
        bool match = row.ambient_dim == row.levi_dim + 2 * row.dim_u_p;
        row.status = match ? "ok" : "mismatch";
        rep.ok = rep.ok && match;
      }
      rep.rows.push_back(std::move(row));
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// CSV rendering (used by the command-line tool).

inline std::string orbits_csv(const std::vector<OrbitRecord>& recs) {
  std::ostringstream out;
  out << "label,representative,dim_z,a_group,dim_b\n";
  for (const auto& rec : recs) {
    std::string rep = "0";
    if (!rec.rep.empty()) {
      rep.clear();
      for (size_t i = 0; i < rec.rep.size(); ++i) {
        if (i) rep += "+";
        rep += rec.rep[i];
      }
    }
    out << rec.label << "," << rep << "," << rec.dim_z << "," << rec.a_group
        << "," << rec.dim_b << "\n";
  }
  return out.str();
}

}  // namespace exlie
