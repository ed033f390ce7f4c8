#include "stackypi1/json_io.hpp"

#include <algorithm>

namespace stackypi1::json_io {

namespace {

[[noreturn]] void schema(const std::string& ptr, const std::string& msg) { throw Error(ErrorKind::SchemaError, msg, ptr); }

std::string escape(const std::string& key) {
  std::string out;
  for (char c : key) {
    if (c == '~') out += "~0";
    else if (c == '/') out += "~1";
    else out += c;
  }
  return out;
}

std::string at(const std::string& ptr, const std::string& key) { return ptr + "/" + escape(key); }
std::string at(const std::string& ptr, std::size_t i) { return ptr + "/" + std::to_string(i); }

const Json& field(const Json& j, const std::string& ptr, const std::string& key) {
  if (!j.is_object()) schema(ptr, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) schema(at(ptr, key), "missing field \"" + key + "\"");
  return *it;
}

const Json* optional_field(const Json& j, const std::string& ptr, const std::string& key) {
  if (!j.is_object()) schema(ptr, "expected an object");
  auto it = j.find(key);
  return it == j.end() ? nullptr : &*it;
}

const Json& array(const Json& j, const std::string& ptr) {
  if (!j.is_array()) schema(ptr, "expected an array");
  return j;
}

std::string read_string(const Json& j, const std::string& ptr) {
  if (!j.is_string()) schema(ptr, "expected a string");
  return j.get<std::string>();
}

std::vector<int> read_int_list(const Json& j, const std::string& ptr) {
  std::vector<int> out;
  for (std::size_t i = 0; i < array(j, ptr).size(); ++i) out.push_back(read_int(j[i], at(ptr, i)));
  return out;
}

Json ints(const std::vector<int>& v) {
  Json a = Json::array();
  for (int x : v) a.push_back(x);
  return a;
}

template <typename T>
Json strings(const std::vector<T>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x);
  return a;
}

}  // namespace

Json parse_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::SchemaError, std::string("malformed JSON: ") + e.what(), "");
  }
}

void check_format(const Json& j) {
  const auto& f = field(j, "", "format");
  if (!f.is_string() || f.get<std::string>() != kFormat)
    schema("/format", std::string("unsupported format, expected \"") + kFormat + "\"");
}

// ---- scalars --------------------------------------------------------------------

Integer read_integer(const Json& j, const std::string& ptr) {
  if (j.is_number_integer()) return Integer(j.get<long long>());
  if (j.is_string()) {
    try {
      return parse_integer(j.get<std::string>());
    } catch (const std::exception&) {
      schema(ptr, "expected a decimal integer, got \"" + j.get<std::string>() + "\"");
    }
  }
  schema(ptr, "expected an integer (number or decimal string)");
}

int read_int(const Json& j, const std::string& ptr) {
  const Integer z = read_integer(j, ptr);
  if (z > std::numeric_limits<int>::max() || z < std::numeric_limits<int>::min()) schema(ptr, "integer out of range");
  return static_cast<int>(z);
}

Rational read_rational(const Json& j, const std::string& ptr) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::exception&) {
      schema(ptr, "expected a rational \"p/q\", got \"" + j.get<std::string>() + "\"");
    }
  }
  schema(ptr, "expected a rational as a string \"p/q\" or an integer");
}

Word read_word(const Json& j, const std::string& ptr) {
  Word w;
  for (std::size_t i = 0; i < array(j, ptr).size(); ++i) {
    const int x = read_int(j[i], at(ptr, i));
    if (x == 0) schema(at(ptr, i), "word letters are nonzero signed generator indices");
    w.push_back(x);
  }
  return w;
}

MatrixQ read_matrix(const Json& j, const std::string& ptr) {
  if (j.is_object()) {
    const int rows = read_int(field(j, ptr, "rows"), at(ptr, "rows"));
    const int cols = read_int(field(j, ptr, "cols"), at(ptr, "cols"));
    if (rows < 0 || cols < 0) schema(ptr, "negative matrix shape");
    const auto& e = array(field(j, ptr, "entries"), at(ptr, "entries"));
    if (static_cast<int>(e.size()) != rows) schema(at(ptr, "entries"), "row count differs from \"rows\"");
    MatrixQ m = zeros<Rational>(rows, cols);
    for (int r = 0; r < rows; ++r) {
      const std::string rp = at(at(ptr, "entries"), static_cast<std::size_t>(r));
      if (static_cast<int>(array(e[static_cast<std::size_t>(r)], rp).size()) != cols) schema(rp, "row length differs from \"cols\"");
      for (int c = 0; c < cols; ++c)
        m(r, c) = read_rational(e[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)], at(rp, static_cast<std::size_t>(c)));
    }
    return m;
  }
  const auto& rows = array(j, ptr);
  if (rows.empty()) schema(ptr, "empty matrix needs the {\"rows\",\"cols\",\"entries\"} form");
  const std::size_t cols = array(rows[0], at(ptr, 0)).size();
  MatrixQ m = zeros<Rational>(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (array(rows[r], at(ptr, r)).size() != cols) schema(at(ptr, r), "ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c)
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = read_rational(rows[r][c], at(at(ptr, r), c));
  }
  return m;
}

Json to_json(const Integer& z) { return to_string(z); }
Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const MatrixQ& m) {
  Json e = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    e.push_back(std::move(row));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(e)}};
}

Json to_json(const MatrixZ& m) {
  Json e = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    e.push_back(std::move(row));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(e)}};
}

Json word_json(const Word& w) { return ints(std::vector<int>(w.begin(), w.end())); }

// ---- inputs ---------------------------------------------------------------------

GroupPresentation read_presentation(const Json& j, const std::string& ptr) {
  GroupPresentation p;
  if (const auto* g = optional_field(j, ptr, "generators")) {
    const std::string gp = at(ptr, "generators");
    for (std::size_t i = 0; i < array(*g, gp).size(); ++i) p.generators.push_back(read_string((*g)[i], at(gp, i)));
  }
  if (const auto* r = optional_field(j, ptr, "relators")) {
    const std::string rp = at(ptr, "relators");
    for (std::size_t i = 0; i < array(*r, rp).size(); ++i) p.relators.push_back(read_word((*r)[i], at(rp, i)));
  }
  try {
    p.validate();
  } catch (const Error& e) {
    schema(ptr, e.what());
  }
  return p;
}

SpaceInput read_space(const Json& j) {
  check_format(j);
  SpaceInput in;
  const auto& levels = array(field(j, "", "levels"), "/levels");
  if (levels.size() > static_cast<std::size_t>(kTopLevel + 1)) schema("/levels", "at most 4 levels (0..3)");
  for (std::size_t k = 0; k < levels.size(); ++k) {
    const std::string lp = at("/levels", k);
    const auto& comps = array(field(levels[k], lp, "components"), at(lp, "components"));
    for (std::size_t c = 0; c < comps.size(); ++c) {
      const std::string cp = at(at(lp, "components"), c);
      RawComponent rc;
      rc.id = read_string(field(comps[c], cp, "id"), at(cp, "id"));
      rc.group = read_presentation(comps[c], cp);
      in.raw.levels[k].push_back(std::move(rc));
    }
  }
  if (const auto* faces = optional_field(j, "", "faces")) {
    for (std::size_t i = 0; i < array(*faces, "/faces").size(); ++i) {
      const std::string fp = at("/faces", i);
      const auto& f = (*faces)[i];
      RawFace rf;
      rf.level = read_int(field(f, fp, "level"), at(fp, "level"));
      rf.source = read_string(field(f, fp, "source"), at(fp, "source"));
      rf.index = read_int(field(f, fp, "index"), at(fp, "index"));
      rf.target = read_string(field(f, fp, "component"), at(fp, "component"));
      if (const auto* im = optional_field(f, fp, "images"))
        for (std::size_t w = 0; w < array(*im, at(fp, "images")).size(); ++w)
          rf.images.push_back(read_word((*im)[w], at(at(fp, "images"), w)));
      in.raw.faces.push_back(std::move(rf));
    }
  }
  if (const auto* deg = optional_field(j, "", "degeneracies")) {
    if (!array(*deg, "/degeneracies").empty())
      schema("/degeneracies", "degeneracies are synthesized; supply nondegenerate simplices only");
  }
  if (const auto* bp = optional_field(j, "", "basepoint")) {
    SimplicialBasepoint b;
    for (std::size_t i = 0; i < array(*bp, "/basepoint").size(); ++i) {
      const std::string pp = at("/basepoint", i);
      b.points.emplace_back(read_int(field((*bp)[i], pp, "level"), at(pp, "level")),
                            read_string(field((*bp)[i], pp, "component"), at(pp, "component")));
    }
    in.basepoint = std::move(b);
  }
  return in;
}

FiniteGroup read_group(const Json& j, const std::string& ptr) {
  if (ptr.empty()) check_format(j);
  std::string name;
  if (const auto* n = optional_field(j, ptr, "name")) name = read_string(*n, at(ptr, "name"));
  try {
    if (const auto* t = optional_field(j, ptr, "table")) {
      const std::string tp = at(ptr, "table");
      std::vector<std::vector<int>> table;
      for (std::size_t r = 0; r < array(*t, tp).size(); ++r) table.push_back(read_int_list((*t)[r], at(tp, r)));
      return FiniteGroup(std::move(table), name.empty() ? "G" : name);
    }
    if (const auto* p = optional_field(j, ptr, "permutations")) {
      const std::string pp = at(ptr, "permutations");
      std::vector<Permutation> gens;
      for (std::size_t r = 0; r < array(*p, pp).size(); ++r) gens.push_back(read_int_list((*p)[r], at(pp, r)));
      return groups::from_permutations(gens, name.empty() ? "G" : name);
    }
    if (const auto* k = optional_field(j, ptr, "named")) {
      const std::string kind = read_string(*k, at(ptr, "named"));
      int n = 0;
      if (const auto* nn = optional_field(j, ptr, "n")) n = read_int(*nn, at(ptr, "n"));
      FiniteGroup g = groups::named(kind, n);
      if (!name.empty()) g.set_name(name);
      return g;
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::SchemaError) throw;
    throw Error(e.kind(), e.what(), ptr.empty() ? "/" : ptr);
  }
  schema(ptr, "group needs one of \"table\", \"permutations\" or \"named\"");
}

namespace {

template <typename Element, typename ReadElement>
void read_data(const Json& j, LocalSystemData<Element>& d, ReadElement read) {
  if (const auto* rep = optional_field(j, "", "representation")) {
    if (!rep->is_object()) schema("/representation", "expected an object keyed by component id");
    for (auto it = rep->begin(); it != rep->end(); ++it) {
      const std::string rp = at("/representation", it.key());
      std::vector<Element> imgs;
      for (std::size_t i = 0; i < array(it.value(), rp).size(); ++i) imgs.push_back(read(it.value()[i], at(rp, i)));
      d.representation[it.key()] = std::move(imgs);
    }
  }
  if (const auto* tr = optional_field(j, "", "transport")) {
    if (!tr->is_object()) schema("/transport", "expected an object keyed by component id");
    for (auto it = tr->begin(); it != tr->end(); ++it) d.transport[it.key()] = read(it.value(), at("/transport", it.key()));
  }
}

}  // namespace

LocalSystem read_local_system(const Json& j) {
  check_format(j);
  const auto& s = field(j, "", "structure");
  const std::string kind = read_string(field(s, "/structure", "kind"), "/structure/kind");
  if (kind == "finite") {
    FiniteLocalSystem f;
    f.group = read_group(field(s, "/structure", "group"), "/structure/group");
    read_data(j, f, [](const Json& x, const std::string& p) { return read_int(x, p); });
    return f;
  }
  if (kind == "matrix") {
    MatrixLocalSystem m;
    m.dimension = read_int(field(s, "/structure", "dimension"), "/structure/dimension");
    if (m.dimension < 1) schema("/structure/dimension", "dimension must be positive");
    read_data(j, m, [](const Json& x, const std::string& p) { return read_matrix(x, p); });
    return m;
  }
  schema("/structure/kind", "expected \"finite\" or \"matrix\"");
}

RawFilteredComplex read_filtered_complex(const Json& j) {
  check_format(j);
  RawFilteredComplex raw;
  if (const auto* md = optional_field(j, "", "min_degree")) raw.min_degree = read_int(*md, "/min_degree");
  const auto& terms = array(field(j, "", "terms"), "/terms");
  for (std::size_t i = 0; i < terms.size(); ++i) raw.dims.push_back(read_int(terms[i], at("/terms", i)));
  if (const auto* d = optional_field(j, "", "differentials"))
    for (std::size_t i = 0; i < array(*d, "/differentials").size(); ++i)
      raw.differentials.push_back(read_matrix((*d)[i], at("/differentials", i)));
  const auto& w = field(j, "", "weights");
  raw.min_weight = read_int(field(w, "/weights", "min"), "/weights/min");
  raw.max_weight = read_int(field(w, "/weights", "max"), "/weights/max");
  if (const auto* f = optional_field(j, "", "filtration")) {
    if (array(*f, "/filtration").size() != terms.size()) schema("/filtration", "one step list per term is required");
    for (std::size_t i = 0; i < f->size(); ++i) {
      const std::string dp = at("/filtration", i);
      std::map<int, MatrixQ> steps;
      for (std::size_t s = 0; s < array((*f)[i], dp).size(); ++s) {
        const std::string sp = at(dp, s);
        const auto& step = (*f)[i][s];
        const int m = read_int(field(step, sp, "weight"), at(sp, "weight"));
        const auto dim = i < raw.dims.size() ? raw.dims[i] : 0;
        MatrixQ span;
        if (const auto* basis = optional_field(step, sp, "basis")) {
          const auto idx = read_int_list(*basis, at(sp, "basis"));
          span = zeros<Rational>(dim, static_cast<Eigen::Index>(idx.size()));
          for (std::size_t c = 0; c < idx.size(); ++c) {
            if (idx[c] < 0 || idx[c] >= dim) schema(at(at(sp, "basis"), c), "basis index out of range");
            span(idx[c], static_cast<Eigen::Index>(c)) = 1;
          }
        } else if (const auto* sm = optional_field(step, sp, "span")) {
          span = read_matrix(*sm, at(sp, "span"));
        } else {
          schema(sp, "filtration step needs \"basis\" or \"span\"");
        }
        if (!steps.emplace(m, std::move(span)).second) schema(at(sp, "weight"), "duplicate weight in step list");
      }
      raw.filtration.push_back(std::move(steps));
    }
  } else {
    raw.filtration.assign(raw.dims.size(), {});
  }
  if (const auto* sl = optional_field(j, "", "slopes"))
    for (std::size_t i = 0; i < array(*sl, "/slopes").size(); ++i) {
      const std::string sp = at("/slopes", i);
      const Cell c{read_int(field((*sl)[i], sp, "weight"), at(sp, "weight")),
                   read_int(field((*sl)[i], sp, "degree"), at(sp, "degree"))};
      raw.slopes[c] = read_int(field((*sl)[i], sp, "slope"), at(sp, "slope"));
    }
  return raw;
}

ParabolicDescriptor read_parabolic(const Json& j) {
  check_format(j);
  ParabolicDescriptor p;
  p.rank = read_int(field(j, "", "rank"), "/rank");
  p.degree = read_integer(field(j, "", "degree"), "/degree");
  p.lambda = read_rational(field(j, "", "lambda"), "/lambda");
  if (const auto* ds = optional_field(j, "", "divisors"))
    for (std::size_t i = 0; i < array(*ds, "/divisors").size(); ++i) {
      const std::string dp = at("/divisors", i);
      ParabolicDivisor d;
      d.n = read_int(field((*ds)[i], dp, "n"), at(dp, "n"));
      const auto& pieces = array(field((*ds)[i], dp, "pieces"), at(dp, "pieces"));
      for (std::size_t k = 0; k < pieces.size(); ++k) {
        const std::string pp = at(at(dp, "pieces"), k);
        WeightPiece w;
        w.alpha = read_rational(field(pieces[k], pp, "alpha"), at(pp, "alpha"));
        w.multiplicity = read_int(field(pieces[k], pp, "multiplicity"), at(pp, "multiplicity"));
        const auto& res = array(field(pieces[k], pp, "residues"), at(pp, "residues"));
        for (std::size_t r = 0; r < res.size(); ++r) w.residues.push_back(read_rational(res[r], at(at(pp, "residues"), r)));
        d.pieces.push_back(std::move(w));
      }
      p.divisors.push_back(std::move(d));
    }
  try {
    check_well_formed(p);
  } catch (const Error& e) {
    throw Error(ErrorKind::SchemaError, e.what(), e.where());
  }
  return p;
}

GroupAction read_action(const Json& j, const FiniteGroup& g, const FiniteGroup& phi, const std::string& ptr) {
  if (const auto* k = optional_field(j, ptr, "kind")) {
    const std::string kind = read_string(*k, at(ptr, "kind"));
    if (kind == "trivial") return trivial_action(g, phi);
    if (kind == "index") {
      const int i = read_int(field(j, ptr, "index"), at(ptr, "index"));
      const auto all = all_actions(g, phi);
      if (i < 0 || i >= static_cast<int>(all.size()))
        schema(at(ptr, "index"), "there are " + std::to_string(all.size()) + " actions");
      return all[static_cast<std::size_t>(i)];
    }
    schema(at(ptr, "kind"), "expected \"trivial\" or \"index\"");
  }
  GroupAction a;
  const auto& maps = array(field(j, ptr, "maps"), at(ptr, "maps"));
  for (std::size_t i = 0; i < maps.size(); ++i) a.push_back(read_int_list(maps[i], at(at(ptr, "maps"), i)));
  return a;
}

// ---- outputs --------------------------------------------------------------------

Json to_json(const GroupPresentation& p) {
  Json rel = Json::array();
  for (const auto& r : p.relators) rel.push_back(word_json(r));
  return Json{{"generators", strings(p.generators)}, {"relators", std::move(rel)}, {"text", format_presentation(p)}};
}

Json to_json(const Abelianization& a) {
  Json torsion = Json::array();
  for (const auto& x : a.torsion) torsion.push_back(to_string(x));
  return Json{{"free_rank", a.free_rank}, {"torsion", std::move(torsion)}, {"text", format_abelianization(a)}};
}

Json to_json(const FiniteGroup& g) { return Json{{"name", g.name()}, {"order", g.order()}, {"table", g.table()}}; }

Json space_json(const RawSpace& raw) {
  Json levels = Json::array();
  for (const auto& level : raw.levels) {
    Json comps = Json::array();
    for (const auto& c : level) {
      Json rel = Json::array();
      for (const auto& r : c.group.relators) rel.push_back(word_json(r));
      comps.push_back(Json{{"id", c.id}, {"generators", strings(c.group.generators)}, {"relators", std::move(rel)}});
    }
    levels.push_back(Json{{"components", std::move(comps)}});
  }
  Json faces = Json::array();
  for (const auto& f : raw.faces) {
    Json im = Json::array();
    for (const auto& w : f.images) im.push_back(word_json(w));
    faces.push_back(Json{{"level", f.level}, {"source", f.source}, {"index", f.index}, {"component", f.target}, {"images", std::move(im)}});
  }
  return Json{{"format", kFormat}, {"levels", std::move(levels)}, {"faces", std::move(faces)}, {"degeneracies", Json::array()}};
}

Json space_summary(const SimplicialSpace& s) {
  Json levels = Json::array();
  for (int k = 0; k <= kTopLevel; ++k) {
    Json comps = Json::array();
    for (const auto& c : s.level(k)) {
      Json faces = Json::array();
      for (const auto& f : c.faces) faces.push_back(s.component(k - 1, f.target).id);
      comps.push_back(Json{{"id", c.id}, {"nondegenerate", c.nondegenerate}, {"group", format_presentation(c.group)},
                           {"faces", std::move(faces)}});
    }
    levels.push_back(Json{{"level", k}, {"components", std::move(comps)}});
  }
  Json counts = Json::array();
  for (auto n : s.nondegenerate_counts()) counts.push_back(n);
  Json classes = Json::array();
  for (const auto& cls : pi0(s)) classes.push_back(strings(cls));
  return Json{{"nondegenerate_counts", std::move(counts)}, {"pi0", std::move(classes)}, {"levels", std::move(levels)},
              {"unverified", strings(s.unverified())}};
}

Json to_json(const LocalSystemReport& r) {
  Json tris = Json::array();
  for (const auto& t : r.triangles) tris.push_back(Json{{"simplex", t.simplex}, {"ok", t.ok}});
  return Json{{"ok", r.ok},
              {"relators_ok", r.relators_ok},
              {"degeneracy_unit_ok", r.degeneracy_unit_ok},
              {"conjugation_ok", r.conjugation_ok},
              {"cocycle_ok", r.cocycle_ok},
              {"triangles", std::move(tris)},
              {"failures", strings(r.failures)}};
}

Json to_json(const CohomologyResult& r) {
  Json degrees = Json::array();
  for (const auto& d : r.degrees) {
    Json x{{"degree", d.degree}, {"computed", d.computed}};
    if (d.computed) {
      x["dimension"] = d.dimension;
      x["cocycles"] = to_json(d.cocycles);
    }
    if (!d.note.empty()) x["note"] = d.note;
    degrees.push_back(std::move(x));
  }
  Json terms = Json::array();
  for (auto t : r.term_dimensions) terms.push_back(t);
  return Json{{"model", r.model}, {"term_dimensions", std::move(terms)}, {"degrees", std::move(degrees)}};
}

Json to_json(const FiniteLocalSystem& s) {
  Json rep = Json::object(), tr = Json::object();
  for (const auto& [id, imgs] : s.representation) rep[id] = ints(imgs);
  for (const auto& [id, g] : s.transport) tr[id] = g;
  return Json{{"representation", std::move(rep)}, {"transport", std::move(tr)}};
}

Json to_json(const FramedEnumeration& e, bool list_objects) {
  Json out{{"framed_count", e.framed.size()},
           {"unframed_count", e.unframed_count},
           {"root", e.root},
           {"tree_edges", strings(e.tree_edges)}};
  if (list_objects) {
    Json objs = Json::array();
    for (const auto& f : e.framed) {
      Json x = to_json(f.datum);
      x["framing"] = ints(f.framing);
      objs.push_back(std::move(x));
    }
    out["objects"] = std::move(objs);
  }
  return out;
}

Json to_json(const TorsorClassification& c) {
  Json classes = Json::array();
  for (const auto& k : c.classes) {
    Json x = to_json(k.representative);
    x["orbit_size"] = k.orbit_size;
    x["automorphisms"] = k.automorphisms;
    classes.push_back(std::move(x));
  }
  return Json{{"class_count", c.classes.size()},
              {"framed_count", c.framed_count},
              {"framing_group_order", c.framing_group_order},
              {"groupoid_cardinality", to_string(c.groupoid_cardinality)},
              {"classes", std::move(classes)}};
}

Json to_json(const WeightEquivalence& w) {
  Json out = to_json(w.classification);
  Json classes = Json::array();
  for (const auto& c : w.classes) {
    Json members = Json::array();
    for (auto m : c.members) members.push_back(m);
    Json restriction = Json::array();
    for (const auto& r : c.restriction) restriction.push_back(ints(r));
    classes.push_back(Json{{"members", std::move(members)}, {"representative", c.representative},
                           {"restriction", std::move(restriction)}});
  }
  out["weight_class_count"] = w.classes.size();
  out["weight_classes"] = std::move(classes);
  return out;
}

Json to_json(const SimplicialComplex2& a) {
  Json edges = Json::array(), tris = Json::array();
  for (const auto& e : a.edges) edges.push_back(Json::array({e[0], e[1]}));
  for (const auto& t : a.triangles) tris.push_back(Json::array({t[0], t[1], t[2]}));
  return Json{{"vertices", a.num_vertices}, {"edges", std::move(edges)}, {"triangles", std::move(tris)},
              {"euler_characteristic", a.euler_characteristic()}};
}

namespace {

Json line_json(const LineConfiguration& c) {
  Json lines = Json::array(), points = Json::array();
  for (const auto& l : c.lines) lines.push_back(Json::array({l[0], l[1]}));
  for (const auto& p : c.points) points.push_back(ints(p));
  return Json{{"lines", std::move(lines)}, {"points", std::move(points)}};
}

}  // namespace

Json to_json(const RealizationPlan& p) {
  Json steps = Json::array();
  for (const auto& s : p.realized.steps)
    steps.push_back(Json{{"kind", s.kind}, {"detail", s.detail}, {"triangles", ints(s.triangles)}});
  Json arcs = Json::array();
  for (const auto& a : p.dual.arcs) arcs.push_back(Json{{"a", a.a}, {"b", a.b}, {"edge", a.edge}});
  const auto cond = check_conditions(p.realized.complex);
  return Json{{"format", kFormat},
              {"input", to_json(p.input)},
              {"complex", to_json(p.realized.complex)},
              {"conditions",
               Json{{"triangle_edges_present", cond.triangle_edges_present},
                    {"vertices_in_edges", cond.vertices_in_edges},
                    {"edges_in_triangles", cond.edges_in_triangles},
                    {"triangles_connected", cond.triangles_connected}}},
              {"steps", std::move(steps)},
              {"used_bridges", p.realized.used_bridges},
              {"dual_graph", Json{{"nodes", p.dual.nodes}, {"arcs", std::move(arcs)}}},
              {"tree", ints(p.tree)},
              {"unfolding",
               Json{{"complex", to_json(p.unfolding.complex)},
                    {"vertex_map", ints(p.unfolding.vertex_map)},
                    {"triangle_origin", ints(p.unfolding.triangle_origin)}}},
              {"pushout", to_json(p.pushout)},
              {"Y", line_json(p.Y)},
              {"Z", line_json(p.Z)},
              {"z_to_y", ints(p.z_to_y)}};
}

Json to_json(const FingerprintResult& f) {
  Json counts = Json::array();
  for (const auto& c : f.counts)
    counts.push_back(Json{{"group", c.group}, {"order", c.order}, {"first", c.first}, {"second", c.second}});
  Json out{{"consistent", f.consistent},
           {"abelianization_first", to_json(f.ab_first)},
           {"abelianization_second", to_json(f.ab_second)},
           {"counts", std::move(counts)}};
  if (!f.reason.empty()) out["reason"] = f.reason;
  if (f.witness) out["witness"] = *f.witness;
  return out;
}

namespace {

Json cell_json(const PageCell& c) {
  return Json{{"weight", c.weight}, {"degree", c.degree}, {"k", c.k}, {"l", c.l}, {"dimension", c.dimension}};
}

Json differential_json(const PageDifferential& d) {
  return Json{{"source", cell_json(d.source)}, {"target", cell_json(d.target)}, {"zero", d.zero}, {"matrix", to_json(d.matrix)}};
}

Json slope_cell_json(const SlopeCell& c) {
  return Json{{"weight", c.weight}, {"degree", c.degree}, {"dimension", c.dimension}, {"slope", c.slope}};
}

}  // namespace

Json to_json(const PageReport& p) {
  Json cells = Json::array(), diffs = Json::array(), totals = Json::object();
  for (const auto& c : p.cells) cells.push_back(cell_json(c));
  for (const auto& d : p.differentials) diffs.push_back(differential_json(d));
  for (const auto& [n, dim] : p.total_by_degree) totals[std::to_string(n)] = dim;
  return Json{{"r", p.r},
              {"stable", p.stable},
              {"all_differentials_zero", p.all_differentials_zero},
              {"total_by_degree", std::move(totals)},
              {"cells", std::move(cells)},
              {"differentials", std::move(diffs)}};
}

Json filtered_complex_json(const FilteredComplex& fc) {
  Json terms = Json::array(), diffs = Json::array(), filt = Json::array(), slopes = Json::array();
  for (int i = fc.min_degree(); i <= fc.max_degree(); ++i) {
    terms.push_back(fc.dim(i));
    if (i < fc.max_degree()) diffs.push_back(to_json(fc.d(i)));
    Json steps = Json::array();
    for (int m = fc.min_weight(); m <= fc.max_weight(); ++m)
      steps.push_back(Json{{"weight", m}, {"span", to_json(fc.W(i, m))}});
    filt.push_back(std::move(steps));
  }
  for (const auto& [cell, s] : fc.slopes())
    slopes.push_back(Json{{"weight", cell.first}, {"degree", cell.second}, {"slope", s}});
  return Json{{"format", kFormat},
              {"min_degree", fc.min_degree()},
              {"terms", std::move(terms)},
              {"differentials", std::move(diffs)},
              {"weights", Json{{"min", fc.min_weight()}, {"max", fc.max_weight()}}},
              {"filtration", std::move(filt)},
              {"slopes", std::move(slopes)}};
}

Json to_json(const Classification& c) {
  Json cells = Json::array();
  for (const auto& s : c.cells) cells.push_back(slope_cell_json(s));
  Json out{{"kind", to_string(c.kind)}, {"d_mixed", c.d_mixed}, {"b_mixed", c.b_mixed}, {"cells", std::move(cells)}};
  if (c.d_offender) out["d_offender"] = slope_cell_json(*c.d_offender);
  if (c.b_offender) out["b_offender"] = slope_cell_json(*c.b_offender);
  return out;
}

Json to_json(const DegenerationCertificate& c) {
  Json out{{"from_page", c.from_page}, {"passed", c.passed}, {"checked_through", c.checked_through}};
  if (c.first_nonzero) out["first_nonzero"] = differential_json(*c.first_nonzero);
  if (c.classified) out["classified"] = to_string(*c.classified);
  return out;
}

Json to_json(const MixedTwistorStructure& m) {
  Json steps = Json::array(), slopes = Json::array(), graded = Json::object();
  for (int w = m.min_weight; w <= m.max_weight; ++w) steps.push_back(Json{{"weight", w}, {"span", to_json(m.W(w))}});
  for (const auto& [w, s] : m.slopes) slopes.push_back(Json{{"weight", w}, {"slope", s}});
  for (const auto& [w, d] : m.graded()) graded[std::to_string(w)] = d;
  return Json{{"dimension", m.dimension}, {"min_weight", m.min_weight}, {"max_weight", m.max_weight},
              {"graded", std::move(graded)}, {"slopes", std::move(slopes)}, {"steps", std::move(steps)}};
}

Json to_json(const FilteredCohomology& h) {
  Json graded = Json::object();
  for (const auto& [w, d] : h.graded) graded[std::to_string(w)] = d;
  return Json{{"degree", h.degree}, {"dimension", h.dimension}, {"graded", std::move(graded)},
              {"representatives", to_json(h.representatives)}};
}

Json to_json(const RootLiftResult& r) {
  Json inv = Json::array();
  for (const auto& x : r.invariants) inv.push_back(to_string(x));
  Json out{{"verdict", to_string(r.verdict)},
           {"contained", r.contained},
           {"kernel_basis", to_json(r.kernel_basis)},
           {"subgroup_invariants", std::move(inv)},
           {"subgroup_order", to_string(r.subgroup_order)}};
  if (r.offending_row >= 0) out["offending_entry"] = Json{{"row", r.offending_row}, {"column", r.offending_column}};
  return out;
}

Json to_json(const ParabolicDescriptor& p) {
  Json divs = Json::array();
  for (const auto& d : p.divisors) {
    Json pieces = Json::array();
    for (const auto& w : d.pieces) {
      Json res = Json::array();
      for (const auto& r : w.residues) res.push_back(to_string(r));
      pieces.push_back(Json{{"alpha", to_string(w.alpha)}, {"multiplicity", w.multiplicity}, {"residues", std::move(res)}});
    }
    divs.push_back(Json{{"n", d.n}, {"pieces", std::move(pieces)}});
  }
  return Json{{"format", kFormat}, {"rank", p.rank}, {"degree", to_string(p.degree)}, {"lambda", to_string(p.lambda)},
              {"divisors", std::move(divs)}};
}

Json to_json(const RootStackDescriptor& r) {
  Json divs = Json::array();
  for (const auto& d : r.divisors) {
    Json pieces = Json::array();
    for (const auto& p : d.pieces)
      pieces.push_back(Json{{"character", p.character}, {"multiplicity", p.multiplicity}, {"residue", to_string(p.residue)}});
    divs.push_back(Json{{"n", d.n}, {"pieces", std::move(pieces)}});
  }
  return Json{{"rank", r.rank}, {"degree", to_string(r.degree)}, {"lambda", to_string(r.lambda)}, {"divisors", std::move(divs)}};
}

Json to_json(const TranslationResult& t) {
  Json v = Json::array();
  for (const auto& x : t.violations) {
    Json e{{"divisor", x.divisor}, {"piece", x.piece}, {"message", x.message}};
    if (x.eigenvalue >= 0) e["eigenvalue"] = x.eigenvalue;
    v.push_back(std::move(e));
  }
  Json out{{"valid", t.valid}, {"violations", std::move(v)}};
  if (t.root) out["root_stack"] = to_json(*t.root);
  return out;
}

Json to_json(const AxiomReport& a) {
  return Json{{"order", a.order},           {"exhaustive", a.exhaustive}, {"checks", a.checks},
              {"identity", a.identity},     {"inverses", a.inverses},     {"associativity", a.associativity},
              {"projection_homomorphism", a.projection_homomorphism}, {"ok", a.ok()}};
}

Json to_json(const GroupoidSummary& g) {
  Json aut = Json::array();
  for (auto a : g.automorphisms) aut.push_back(a);
  return Json{{"objects", g.objects}, {"classes", g.automorphisms.size()}, {"automorphisms", std::move(aut)},
              {"cardinality", to_string(g.cardinality)}};
}

Json to_json(const ChangeActionReport& r) {
  Json ql{{"cardinality", to_string(r.quot_left.cardinality)}};
  return Json{{"kernel_order", r.kernel_order},
              {"wreath_order", r.wreath_order},
              {"h_order", r.h_order},
              {"left", to_json(r.left)},
              {"right", to_json(r.right)},
              {"equal", r.equal},
              {"quotient_left", std::move(ql)},
              {"quotient_right", to_json(r.quot_right)},
              {"quotient_equal", r.quot_equal}};
}

Json error_json(const Error& e) {
  Json out{{"kind", to_string(e.kind())}, {"message", e.what()}};
  if (!e.where().empty() || e.kind() == ErrorKind::SchemaError) out["where"] = e.where();
  return out;
}

Json to_json(const RunReport& r) {
  Json inputs = Json::array();
  for (const auto& i : r.inputs) inputs.push_back(Json{{"name", i.name}, {"sha256", i.sha256}});
  Json out{{"format", kFormat}, {"command", r.command}, {"inputs", std::move(inputs)}, {"results", r.results},
           {"warnings", strings(r.warnings)}};
  if (r.timing) out["timing"] = *r.timing;
  return out;
}

RunReport read_run_report(const Json& j) {
  check_format(j);
  RunReport r;
  r.command = read_string(field(j, "", "command"), "/command");
  const auto& inputs = array(field(j, "", "inputs"), "/inputs");
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    const std::string ip = at("/inputs", i);
    r.inputs.push_back({read_string(field(inputs[i], ip, "name"), at(ip, "name")),
                        read_string(field(inputs[i], ip, "sha256"), at(ip, "sha256"))});
  }
  r.results = field(j, "", "results");
  const auto& w = array(field(j, "", "warnings"), "/warnings");
  for (std::size_t i = 0; i < w.size(); ++i) r.warnings.push_back(read_string(w[i], at("/warnings", i)));
  if (const auto* t = optional_field(j, "", "timing")) r.timing = *t;
  return r;
}

}  // namespace stackypi1::json_io
