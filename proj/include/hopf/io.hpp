#pragma once

#include <fstream>
#include <map>
#include <sstream>

#include "hopf/gset.hpp"

namespace hopf {

// ---------------------------------------------------------------------------
// A line-oriented text format for groups, magmas, actions, gamma maps and
// raw structure constants. One section per object:
//
//   scalars rational            | scalars mod <p>
//   group NAME / order n / table / <n rows> / end
//   magma NAME / size n / unit i / table / <rows> / end
//   gset NAME / group REF / magma REF / action / <|X| rows of |G|> / end
//   gamma NAME / gset REF / map <|X| ints> / end
//   space NAME / dim n [/ labels ...] / end
//   bialgebra NAME / dim n [/ labels ...] / unit <scalars> /
//     mult / <rows "i j : c_1 .. c_n"> / comult / <rows "i : c..."> /
//     counit <scalars> [/ antipode / <n rows of n scalars>] / end
//   morphism NAME / from REF / to REF / matrix / <rows> / end
//   datum NAME / a REF / h REF / lhd / <rows "i j : c...("values in H")>
//     / rhd / <rows> / cocycle / <rows> / end
//
// '#' starts a comment. Parse errors carry the 1-based line number.
// ---------------------------------------------------------------------------

struct ParseError : std::runtime_error {
  size_t line;
  ParseError(size_t line_, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

struct GroupSection {
  std::string name;
  size_t order = 0;
  std::vector<std::vector<int>> table;
  friend bool operator==(const GroupSection&, const GroupSection&) = default;
};

struct MagmaSection {
  std::string name;
  size_t size = 0;
  int unit = 0;
  std::vector<std::vector<int>> table;
  friend bool operator==(const MagmaSection&, const MagmaSection&) = default;
};

struct GSetSection {
  std::string name;
  std::string group, magma;
  std::vector<std::vector<int>> action;
  friend bool operator==(const GSetSection&, const GSetSection&) = default;
};

struct GammaSection {
  std::string name;
  std::string gset;
  std::vector<int> map;
  friend bool operator==(const GammaSection&, const GammaSection&) = default;
};

struct SpaceSection {
  std::string name;
  size_t dim = 0;
  std::vector<std::string> labels;  // optional
  friend bool operator==(const SpaceSection&, const SpaceSection&) = default;
};

struct BialgebraSection {
  std::string name;
  size_t dim = 0;
  std::vector<std::string> labels;                  // optional
  std::vector<std::string> unit;                    // n scalars, as text
  std::vector<std::vector<std::string>> mult;       // n^2 rows of n
  std::vector<std::vector<std::string>> comult;     // n rows of n^2
  std::vector<std::string> counit;                  // n scalars
  std::vector<std::vector<std::string>> antipode;   // optional, n rows of n
  friend bool operator==(const BialgebraSection&, const BialgebraSection&) = default;
};

struct MorphismSection {
  std::string name;
  std::string from, to;
  std::vector<std::vector<std::string>> matrix;  // codomain rows x domain cols
  friend bool operator==(const MorphismSection&, const MorphismSection&) = default;
};

struct DatumSection {
  std::string name;
  std::string a, h;
  std::vector<std::vector<std::string>> lhd, rhd, cocycle;  // nh*na / nh*na / nh*nh rows
  friend bool operator==(const DatumSection&, const DatumSection&) = default;
};

struct InputDocument {
  ScalarMode mode;
  std::vector<GroupSection> groups;
  std::vector<MagmaSection> magmas;
  std::vector<GSetSection> gsets;
  std::vector<GammaSection> gammas;
  std::vector<SpaceSection> spaces;
  std::vector<BialgebraSection> bialgebras;
  std::vector<MorphismSection> morphisms;
  std::vector<DatumSection> datums;

  friend bool operator==(const InputDocument& x, const InputDocument& y) {
    return x.mode == y.mode && x.groups == y.groups && x.magmas == y.magmas &&
           x.gsets == y.gsets && x.gammas == y.gammas && x.spaces == y.spaces &&
           x.bialgebras == y.bialgebras && x.morphisms == y.morphisms &&
           x.datums == y.datums;
  }

  template <class T>
  static const T* find_in(const std::vector<T>& v, const std::string& name) {
    for (const T& t : v)
      if (t.name == name) return &t;
    return nullptr;
  }
};

// Exact scalar from text: "5", "-3/7"; in mod-p mode fractions reduce via
// the modular inverse. Zero denominators are rejected at the source line.
inline Scalar parse_scalar(const std::string& tok, ScalarMode mode, size_t line) {
  auto parse_long = [&](const std::string& s) {
    try {
      size_t pos = 0;
      long v = std::stol(s, &pos);
      if (pos != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (...) {
      throw ParseError(line, "malformed scalar '" + tok + "'");
    }
  };
  size_t slash = tok.find('/');
  long num = parse_long(slash == std::string::npos ? tok : tok.substr(0, slash));
  long den = 1;
  if (slash != std::string::npos) den = parse_long(tok.substr(slash + 1));
  if (den == 0) throw ParseError(line, "zero denominator in '" + tok + "'");
  if (mode.is_rational()) return Scalar::rational(num, den);
  return Scalar::mod_p(num, mode.p) / Scalar::mod_p(den, mode.p);
}

namespace detail {

struct Cursor {
  std::vector<std::pair<size_t, std::vector<std::string>>> lines;  // line no + tokens
  size_t pos = 0;

  bool done() const { return pos >= lines.size(); }
  size_t line() const { return done() ? (lines.empty() ? 0 : lines.back().first) : lines[pos].first; }
  const std::vector<std::string>& peek() const { return lines[pos].second; }
  std::vector<std::string> next() { return lines[pos++].second; }
};

inline Cursor tokenize(const std::string& text) {
  Cursor cur;
  std::istringstream in(text);
  std::string raw;
  size_t n = 0;
  while (std::getline(in, raw)) {
    ++n;
    size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::vector<std::string> toks;
    std::string t;
    while (ls >> t) toks.push_back(t);
    if (!toks.empty()) cur.lines.emplace_back(n, std::move(toks));
  }
  return cur;
}

inline int parse_int(const std::string& tok, size_t line) {
  try {
    size_t pos = 0;
    int v = std::stoi(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (...) {
    throw ParseError(line, "expected an integer, got '" + tok + "'");
  }
}

// rows of integers until 'end' or a keyword
inline std::vector<std::vector<int>> int_rows(Cursor& cur, size_t nrows, size_t ncols) {
  std::vector<std::vector<int>> rows;
  while (rows.size() < nrows) {
    if (cur.done()) throw ParseError(cur.line(), "unexpected end of table");
    size_t line = cur.line();
    auto toks = cur.next();
    if (toks.size() != ncols)
      throw ParseError(line, "expected " + std::to_string(ncols) + " entries, got " +
                                 std::to_string(toks.size()));
    std::vector<int> row;
    for (auto& t : toks) row.push_back(parse_int(t, line));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline std::vector<std::vector<std::string>> scalar_rows(Cursor& cur, size_t nrows,
                                                         size_t ncols, ScalarMode mode) {
  std::vector<std::vector<std::string>> rows;
  while (rows.size() < nrows) {
    if (cur.done()) throw ParseError(cur.line(), "unexpected end of matrix");
    size_t line = cur.line();
    auto toks = cur.next();
    if (toks.size() != ncols)
      throw ParseError(line, "expected " + std::to_string(ncols) + " scalars, got " +
                                 std::to_string(toks.size()));
    for (auto& t : toks) parse_scalar(t, mode, line);  // validate now
    rows.push_back(std::move(toks));
  }
  return rows;
}

// rows "i j : c_1 ... c_n" for binary structure maps, in row-major (i, j)
// order
inline std::vector<std::vector<std::string>> pair_rows(Cursor& cur, size_t ni, size_t nj,
                                                       size_t nvals, ScalarMode mode) {
  std::vector<std::vector<std::string>> rows(ni * nj);
  std::vector<bool> seen(ni * nj, false);
  for (size_t k = 0; k < ni * nj; ++k) {
    if (cur.done()) throw ParseError(cur.line(), "unexpected end of map rows");
    size_t line = cur.line();
    auto toks = cur.next();
    if (toks.size() != nvals + 3 || toks[2] != ":")
      throw ParseError(line, "expected 'i j : " + std::to_string(nvals) + " scalars'");
    size_t i = (size_t)parse_int(toks[0], line), j = (size_t)parse_int(toks[1], line);
    if (i >= ni || j >= nj) throw ParseError(line, "index out of range");
    if (seen[i * nj + j]) throw ParseError(line, "duplicate row for the same pair");
    seen[i * nj + j] = true;
    std::vector<std::string> vals(toks.begin() + 3, toks.end());
    for (auto& t : vals) parse_scalar(t, mode, line);
    rows[i * nj + j] = std::move(vals);
  }
  return rows;
}

}  // namespace detail

inline InputDocument parse_document(const std::string& text) {
  detail::Cursor cur = detail::tokenize(text);
  InputDocument doc;
  doc.mode = rational_mode();
  std::set<std::string> names;

  auto expect_name = [&](const std::vector<std::string>& toks, size_t line) {
    if (toks.size() != 2) throw ParseError(line, "expected '" + toks[0] + " <name>'");
    if (!names.insert(toks[1]).second)
      throw ParseError(line, "duplicate section name '" + toks[1] + "'");
    return toks[1];
  };
  auto expect_end = [&](detail::Cursor& c) {
    if (c.done() || c.peek() != std::vector<std::string>{"end"})
      throw ParseError(c.line(), "expected 'end'");
    c.next();
  };
  auto key_line = [&](detail::Cursor& c, const std::string& key,
                      size_t count) -> std::vector<std::string> {
    if (c.done()) throw ParseError(c.line(), "expected '" + key + "'");
    size_t line = c.line();
    auto toks = c.next();
    if (toks.empty() || toks[0] != key)
      throw ParseError(line, "expected '" + key + "', got '" +
                                 (toks.empty() ? "" : toks[0]) + "'");
    if (count != (size_t)-1 && toks.size() != count + 1)
      throw ParseError(line, "'" + key + "' expects " + std::to_string(count) + " value(s)");
    return {toks.begin() + 1, toks.end()};
  };

  bool scalars_seen = false;
  while (!cur.done()) {
    size_t line = cur.line();
    auto toks = cur.next();
    const std::string& kind = toks[0];
    if (kind == "scalars") {
      if (scalars_seen) throw ParseError(line, "duplicate scalars declaration");
      scalars_seen = true;
      if (toks.size() == 2 && toks[1] == "rational")
        doc.mode = rational_mode();
      else if (toks.size() == 3 && toks[1] == "mod") {
        long p = detail::parse_int(toks[2], line);
        if (!is_prime(p)) throw ParseError(line, "modulus must be prime");
        doc.mode = mod_p_mode(p);
      } else
        throw ParseError(line, "expected 'scalars rational' or 'scalars mod <p>'");
    } else if (kind == "group") {
      GroupSection g;
      g.name = expect_name(toks, line);
      g.order = (size_t)detail::parse_int(key_line(cur, "order", 1)[0], cur.line());
      key_line(cur, "table", 0);
      g.table = detail::int_rows(cur, g.order, g.order);
      expect_end(cur);
      doc.groups.push_back(std::move(g));
    } else if (kind == "magma") {
      MagmaSection m;
      m.name = expect_name(toks, line);
      m.size = (size_t)detail::parse_int(key_line(cur, "size", 1)[0], cur.line());
      m.unit = detail::parse_int(key_line(cur, "unit", 1)[0], cur.line());
      key_line(cur, "table", 0);
      m.table = detail::int_rows(cur, m.size, m.size);
      expect_end(cur);
      doc.magmas.push_back(std::move(m));
    } else if (kind == "gset") {
      GSetSection s;
      s.name = expect_name(toks, line);
      s.group = key_line(cur, "group", 1)[0];
      s.magma = key_line(cur, "magma", 1)[0];
      const GroupSection* g = InputDocument::find_in(doc.groups, s.group);
      const MagmaSection* m = InputDocument::find_in(doc.magmas, s.magma);
      if (!g) throw ParseError(line, "gset references unknown group '" + s.group + "'");
      if (!m) throw ParseError(line, "gset references unknown magma '" + s.magma + "'");
      key_line(cur, "action", 0);
      s.action = detail::int_rows(cur, m->size, g->order);
      expect_end(cur);
      doc.gsets.push_back(std::move(s));
    } else if (kind == "gamma") {
      GammaSection s;
      s.name = expect_name(toks, line);
      s.gset = key_line(cur, "gset", 1)[0];
      const GSetSection* gs = InputDocument::find_in(doc.gsets, s.gset);
      if (!gs) throw ParseError(line, "gamma references unknown gset '" + s.gset + "'");
      const MagmaSection* m = InputDocument::find_in(doc.magmas, gs->magma);
      size_t ln = cur.line();
      auto vals = key_line(cur, "map", (size_t)-1);
      if (vals.size() != m->size)
        throw ParseError(ln, "gamma map must list " + std::to_string(m->size) + " images");
      for (auto& v : vals) s.map.push_back(detail::parse_int(v, ln));
      expect_end(cur);
      doc.gammas.push_back(std::move(s));
    } else if (kind == "space") {
      SpaceSection s;
      s.name = expect_name(toks, line);
      s.dim = (size_t)detail::parse_int(key_line(cur, "dim", 1)[0], cur.line());
      if (!cur.done() && cur.peek()[0] == "labels") {
        auto vals = key_line(cur, "labels", (size_t)-1);
        if (vals.size() != s.dim) throw ParseError(cur.line(), "label count != dim");
        s.labels = vals;
      }
      expect_end(cur);
      doc.spaces.push_back(std::move(s));
    } else if (kind == "bialgebra") {
      BialgebraSection b;
      b.name = expect_name(toks, line);
      b.dim = (size_t)detail::parse_int(key_line(cur, "dim", 1)[0], cur.line());
      if (!cur.done() && cur.peek()[0] == "labels") {
        auto vals = key_line(cur, "labels", (size_t)-1);
        if (vals.size() != b.dim) throw ParseError(cur.line(), "label count != dim");
        b.labels = vals;
      }
      {
        size_t ln = cur.line();
        auto vals = key_line(cur, "unit", (size_t)-1);
        if (vals.size() != b.dim) throw ParseError(ln, "unit must list dim scalars");
        for (auto& v : vals) parse_scalar(v, doc.mode, ln);
        b.unit = vals;
      }
      key_line(cur, "mult", 0);
      b.mult = detail::pair_rows(cur, b.dim, b.dim, b.dim, doc.mode);
      key_line(cur, "comult", 0);
      {
        std::vector<std::vector<std::string>> rows(b.dim);
        std::vector<bool> seen(b.dim, false);
        for (size_t k = 0; k < b.dim; ++k) {
          size_t l2 = cur.line();
          auto t2 = cur.next();
          if (t2.size() != b.dim * b.dim + 2 || t2[1] != ":")
            throw ParseError(l2, "expected 'i : " + std::to_string(b.dim * b.dim) +
                                     " scalars'");
          size_t i = (size_t)detail::parse_int(t2[0], l2);
          if (i >= b.dim || seen[i]) throw ParseError(l2, "bad or duplicate comult row");
          seen[i] = true;
          std::vector<std::string> vals(t2.begin() + 2, t2.end());
          for (auto& v : vals) parse_scalar(v, doc.mode, l2);
          rows[i] = std::move(vals);
        }
        b.comult = std::move(rows);
      }
      {
        size_t ln = cur.line();
        auto vals = key_line(cur, "counit", (size_t)-1);
        if (vals.size() != b.dim) throw ParseError(ln, "counit must list dim scalars");
        for (auto& v : vals) parse_scalar(v, doc.mode, ln);
        b.counit = vals;
      }
      if (!cur.done() && cur.peek()[0] == "antipode") {
        cur.next();
        b.antipode = detail::scalar_rows(cur, b.dim, b.dim, doc.mode);
      }
      expect_end(cur);
      doc.bialgebras.push_back(std::move(b));
    } else if (kind == "morphism") {
      MorphismSection m;
      m.name = expect_name(toks, line);
      m.from = key_line(cur, "from", 1)[0];
      m.to = key_line(cur, "to", 1)[0];
      auto dim_of = [&](const std::string& ref) -> size_t {
        if (auto* b = InputDocument::find_in(doc.bialgebras, ref)) return b->dim;
        if (auto* s = InputDocument::find_in(doc.spaces, ref)) return s->dim;
        if (auto* g = InputDocument::find_in(doc.groups, ref)) return g->order;
        if (auto* x = InputDocument::find_in(doc.magmas, ref)) return x->size;
        throw ParseError(line, "morphism references unknown object '" + ref + "'");
      };
      size_t nd = dim_of(m.from), nc = dim_of(m.to);
      key_line(cur, "matrix", 0);
      m.matrix = detail::scalar_rows(cur, nc, nd, doc.mode);
      expect_end(cur);
      doc.morphisms.push_back(std::move(m));
    } else if (kind == "datum") {
      DatumSection d;
      d.name = expect_name(toks, line);
      d.a = key_line(cur, "a", 1)[0];
      d.h = key_line(cur, "h", 1)[0];
      auto dim_of = [&](const std::string& ref) -> size_t {
        if (auto* b = InputDocument::find_in(doc.bialgebras, ref)) return b->dim;
        if (auto* g = InputDocument::find_in(doc.groups, ref)) return g->order;
        if (auto* x = InputDocument::find_in(doc.magmas, ref)) return x->size;
        throw ParseError(line, "datum references unknown object '" + ref + "'");
      };
      size_t na = dim_of(d.a), nh = dim_of(d.h);
      key_line(cur, "lhd", 0);
      d.lhd = detail::pair_rows(cur, nh, na, nh, doc.mode);
      key_line(cur, "rhd", 0);
      d.rhd = detail::pair_rows(cur, nh, na, na, doc.mode);
      key_line(cur, "cocycle", 0);
      d.cocycle = detail::pair_rows(cur, nh, nh, na, doc.mode);
      expect_end(cur);
      doc.datums.push_back(std::move(d));
    } else {
      throw ParseError(line, "unknown section '" + kind + "'");
    }
  }
  return doc;
}

// ---------------------------------------------------------------------------
// Serialization; parse(serialize(doc)) == doc.
// ---------------------------------------------------------------------------

inline std::string serialize_document(const InputDocument& doc) {
  std::ostringstream out;
  out << "scalars "
      << (doc.mode.is_rational() ? std::string("rational")
                                 : "mod " + std::to_string(doc.mode.p))
      << "\n";
  auto int_table = [&](const std::vector<std::vector<int>>& t) {
    for (auto& row : t) {
      out << " ";
      for (int v : row) out << " " << v;
      out << "\n";
    }
  };
  auto scalar_table = [&](const std::vector<std::vector<std::string>>& t) {
    for (auto& row : t) {
      out << " ";
      for (auto& v : row) out << " " << v;
      out << "\n";
    }
  };
  auto pair_table = [&](const std::vector<std::vector<std::string>>& t, size_t ni,
                        size_t nj) {
    for (size_t i = 0; i < ni; ++i)
      for (size_t j = 0; j < nj; ++j) {
        out << "  " << i << " " << j << " :";
        for (auto& v : t[i * nj + j]) out << " " << v;
        out << "\n";
      }
  };
  for (auto& g : doc.groups) {
    out << "\ngroup " << g.name << "\n  order " << g.order << "\n  table\n";
    int_table(g.table);
    out << "end\n";
  }
  for (auto& m : doc.magmas) {
    out << "\nmagma " << m.name << "\n  size " << m.size << "\n  unit " << m.unit
        << "\n  table\n";
    int_table(m.table);
    out << "end\n";
  }
  for (auto& s : doc.gsets) {
    out << "\ngset " << s.name << "\n  group " << s.group << "\n  magma " << s.magma
        << "\n  action\n";
    int_table(s.action);
    out << "end\n";
  }
  for (auto& s : doc.gammas) {
    out << "\ngamma " << s.name << "\n  gset " << s.gset << "\n  map";
    for (int v : s.map) out << " " << v;
    out << "\nend\n";
  }
  for (auto& s : doc.spaces) {
    out << "\nspace " << s.name << "\n  dim " << s.dim << "\n";
    if (!s.labels.empty()) {
      out << "  labels";
      for (auto& l : s.labels) out << " " << l;
      out << "\n";
    }
    out << "end\n";
  }
  for (auto& b : doc.bialgebras) {
    out << "\nbialgebra " << b.name << "\n  dim " << b.dim << "\n";
    if (!b.labels.empty()) {
      out << "  labels";
      for (auto& l : b.labels) out << " " << l;
      out << "\n";
    }
    out << "  unit";
    for (auto& v : b.unit) out << " " << v;
    out << "\n  mult\n";
    pair_table(b.mult, b.dim, b.dim);
    out << "  comult\n";
    for (size_t i = 0; i < b.dim; ++i) {
      out << "  " << i << " :";
      for (auto& v : b.comult[i]) out << " " << v;
      out << "\n";
    }
    out << "  counit";
    for (auto& v : b.counit) out << " " << v;
    out << "\n";
    if (!b.antipode.empty()) {
      out << "  antipode\n";
      scalar_table(b.antipode);
    }
    out << "end\n";
  }
  for (auto& m : doc.morphisms) {
    out << "\nmorphism " << m.name << "\n  from " << m.from << "\n  to " << m.to
        << "\n  matrix\n";
    scalar_table(m.matrix);
    out << "end\n";
  }
  for (auto& d : doc.datums) {
    out << "\ndatum " << d.name << "\n  a " << d.a << "\n  h " << d.h << "\n  lhd\n";
    // lhd/rhd hold nh*na rows, cocycle nh*nh; recover the shape from the
    // row-major block sizes
    size_t nhh = 0;
    for (size_t t = 1; t * t <= d.cocycle.size(); ++t)
      if (t * t == d.cocycle.size()) nhh = t;
    size_t naa = nhh == 0 ? 0 : d.lhd.size() / nhh;
    pair_table(d.lhd, nhh, naa);
    out << "  rhd\n";
    pair_table(d.rhd, nhh, naa);
    out << "  cocycle\n";
    pair_table(d.cocycle, nhh, nhh);
    out << "end\n";
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Resolution into library objects
// ---------------------------------------------------------------------------

inline FiniteGroup resolve_group(const GroupSection& g) {
  FiniteGroup out;
  out.name = g.name;
  out.n = g.order;
  out.table = g.table;
  out.identity = -1;
  for (size_t e = 0; e < g.order; ++e) {
    bool id = true;
    for (size_t i = 0; i < g.order; ++i)
      id = id && g.table[e][i] == (int)i && g.table[i][e] == (int)i;
    if (id) {
      out.identity = (int)e;
      break;
    }
  }
  if (out.identity < 0) throw std::invalid_argument("group " + g.name + " has no identity");
  return out;
}

inline PointedMagma resolve_magma(const MagmaSection& m) {
  PointedMagma out;
  out.name = m.name;
  out.n = m.size;
  out.unit = m.unit;
  out.table = m.table;
  return out;
}

inline GSetDatum resolve_gset_datum(const InputDocument& doc, const GSetSection& s,
                                    const GammaSection& gm) {
  const GroupSection* g = InputDocument::find_in(doc.groups, s.group);
  const MagmaSection* m = InputDocument::find_in(doc.magmas, s.magma);
  GSetDatum d;
  d.g = resolve_group(*g);
  d.x = resolve_magma(*m);
  d.act = s.action;
  d.gamma = gm.map;
  return d;
}

inline LinMap resolve_matrix(const std::vector<std::vector<std::string>>& rows,
                             const VectorSpace& dom, const VectorSpace& cod,
                             ScalarMode mode) {
  LinMap m(dom, cod, mode);
  for (size_t r = 0; r < cod.dim; ++r)
    for (size_t c = 0; c < dom.dim; ++c) m.at(r, c) = parse_scalar(rows[r][c], mode, 0);
  return m;
}

struct ResolvedBialgebra {
  FinBialgebra b;
  std::optional<LinMap> antipode;

  HopfAlgebra hopf() const {
    if (!antipode) throw std::invalid_argument("bialgebra has no antipode given");
    return HopfAlgebra{b, *antipode};
  }
};

inline VectorSpace section_space(const BialgebraSection& bs) {
  if (!bs.labels.empty()) return space_from_labels(bs.labels);
  return make_space(bs.name + "_", bs.dim);
}

inline ResolvedBialgebra resolve_bialgebra(const BialgebraSection& bs, ScalarMode mode) {
  VectorSpace s = section_space(bs);
  size_t n = bs.dim;
  LinMap mult(tensor_space(s, s), s, mode);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t r = 0; r < n; ++r)
        mult.at(r, i * n + j) = parse_scalar(bs.mult[i * n + j][r], mode, 0);
  LinMap comult(s, tensor_space(s, s), mode);
  for (size_t i = 0; i < n; ++i)
    for (size_t t = 0; t < n * n; ++t) comult.at(t, i) = parse_scalar(bs.comult[i][t], mode, 0);
  LinMap counit(s, ground_space(), mode);
  Vec unit = zero_vec(n, mode);
  for (size_t i = 0; i < n; ++i) {
    counit.at(0, i) = parse_scalar(bs.counit[i], mode, 0);
    unit[i] = parse_scalar(bs.unit[i], mode, 0);
  }
  ResolvedBialgebra out{FinBialgebra{make_algebra(s, mult, unit),
                                     make_coalgebra(s, comult, counit)},
                        std::nullopt};
  if (!bs.antipode.empty()) {
    LinMap ant(s, s, mode);
    for (size_t r = 0; r < n; ++r)
      for (size_t c = 0; c < n; ++c) ant.at(r, c) = parse_scalar(bs.antipode[r][c], mode, 0);
    out.antipode = ant;
  }
  return out;
}

// A named object usable as a bialgebra: a bialgebra section, or a group
// (its group algebra), or a magma (its group-like carrier).
inline ResolvedBialgebra resolve_as_bialgebra(const InputDocument& doc,
                                              const std::string& ref) {
  if (auto* b = InputDocument::find_in(doc.bialgebras, ref))
    return resolve_bialgebra(*b, doc.mode);
  if (auto* g = InputDocument::find_in(doc.groups, ref)) {
    HopfAlgebra ha = group_algebra(resolve_group(*g), doc.mode);
    return ResolvedBialgebra{ha.b, ha.antipode};
  }
  if (auto* m = InputDocument::find_in(doc.magmas, ref))
    return ResolvedBialgebra{grouplike_carrier(resolve_magma(*m), doc.mode), std::nullopt};
  throw std::invalid_argument("unknown bialgebra reference '" + ref + "'");
}

inline VectorSpace resolve_space(const InputDocument& doc, const std::string& ref) {
  if (auto* s = InputDocument::find_in(doc.spaces, ref)) {
    if (!s->labels.empty()) return space_from_labels(s->labels);
    return make_space(s->name + "_", s->dim);
  }
  return resolve_as_bialgebra(doc, ref).b.space();
}

inline ExtendingDatum resolve_datum(const InputDocument& doc, const DatumSection& ds) {
  ResolvedBialgebra a = resolve_as_bialgebra(doc, ds.a);
  ResolvedBialgebra h = resolve_as_bialgebra(doc, ds.h);
  HopfAlgebra ha = a.hopf();
  size_t na = ha.dim(), nh = h.b.dim();
  ScalarMode md = doc.mode;
  LinMap lhd(tensor_space(h.b.space(), ha.space()), h.b.space(), md);
  LinMap rhd(tensor_space(h.b.space(), ha.space()), ha.space(), md);
  LinMap cocycle(tensor_space(h.b.space(), h.b.space()), ha.space(), md);
  for (size_t i = 0; i < nh; ++i)
    for (size_t j = 0; j < na; ++j)
      for (size_t r = 0; r < nh; ++r)
        lhd.at(r, i * na + j) = parse_scalar(ds.lhd[i * na + j][r], md, 0);
  for (size_t i = 0; i < nh; ++i)
    for (size_t j = 0; j < na; ++j)
      for (size_t r = 0; r < na; ++r)
        rhd.at(r, i * na + j) = parse_scalar(ds.rhd[i * na + j][r], md, 0);
  for (size_t i = 0; i < nh; ++i)
    for (size_t j = 0; j < nh; ++j)
      for (size_t r = 0; r < na; ++r)
        cocycle.at(r, i * nh + j) = parse_scalar(ds.cocycle[i * nh + j][r], md, 0);
  FinBialgebra hb = h.b;
  hb.alg.assoc_required = false;
  return ExtendingDatum{ha, hb, lhd, rhd, cocycle};
}

// ---------------------------------------------------------------------------
// Emission of built structures
// ---------------------------------------------------------------------------

inline BialgebraSection bialgebra_to_section(const FinBialgebra& b, const std::string& name,
                                             const LinMap* antipode = nullptr) {
  BialgebraSection s;
  s.name = name;
  s.dim = b.dim();
  size_t n = b.dim();
  for (size_t i = 0; i < n; ++i) s.unit.push_back(b.alg.unit[i].str());
  s.mult.resize(n * n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t r = 0; r < n; ++r) s.mult[i * n + j].push_back(b.alg.mult.at(r, i * n + j).str());
  s.comult.resize(n);
  for (size_t i = 0; i < n; ++i)
    for (size_t t = 0; t < n * n; ++t) s.comult[i].push_back(b.coa.comult.at(t, i).str());
  for (size_t i = 0; i < n; ++i) s.counit.push_back(b.coa.counit.at(0, i).str());
  if (antipode) {
    s.antipode.resize(n);
    for (size_t r = 0; r < n; ++r)
      for (size_t c = 0; c < n; ++c) s.antipode[r].push_back(antipode->at(r, c).str());
  }
  return s;
}

inline DatumSection datum_to_section(const ExtendingDatum& om, const std::string& name,
                                     const std::string& a_ref, const std::string& h_ref) {
  DatumSection s;
  s.name = name;
  s.a = a_ref;
  s.h = h_ref;
  size_t na = om.na(), nh = om.nh();
  s.lhd.resize(nh * na);
  s.rhd.resize(nh * na);
  s.cocycle.resize(nh * nh);
  for (size_t i = 0; i < nh; ++i)
    for (size_t j = 0; j < na; ++j) {
      for (size_t r = 0; r < nh; ++r) s.lhd[i * na + j].push_back(om.lhd.at(r, i * na + j).str());
      for (size_t r = 0; r < na; ++r) s.rhd[i * na + j].push_back(om.rhd.at(r, i * na + j).str());
    }
  for (size_t i = 0; i < nh; ++i)
    for (size_t j = 0; j < nh; ++j)
      for (size_t r = 0; r < na; ++r)
        s.cocycle[i * nh + j].push_back(om.cocycle.at(r, i * nh + j).str());
  return s;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

}  // namespace hopf
