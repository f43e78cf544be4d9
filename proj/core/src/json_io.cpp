#include "polyscheme/json_io.hpp"

#include <cstdio>

namespace polyscheme {

namespace {

// Tiny append-only JSON writer: fixed field order, doubles always printed
// with 17 significant digits so output is byte-stable across runs.
class JsonWriter {
 public:
  std::string take() { return std::move(out_); }

  void begin_object() { open('{'); }
  void end_object() { close('}'); }
  void begin_array() { open('['); }
  void end_array() { close(']'); }

  void key(const char* name) {
    comma();
    string_literal(name);
    out_ += ':';
    pending_value_ = true;
  }

  void value(const std::string& s) {
    comma();
    string_literal(s.c_str());
  }
  void value(const char* s) {
    comma();
    string_literal(s);
  }
  void value(double d) {
    comma();
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", d);
    out_ += buf;
  }
  void value(long long v) {
    comma();
    out_ += std::to_string(v);
  }
  void value(int v) { value(static_cast<long long>(v)); }
  void value(bool b) {
    comma();
    out_ += b ? "true" : "false";
  }
  void null() {
    comma();
    out_ += "null";
  }

 private:
  void open(char c) {
    comma();
    out_ += c;
    need_comma_.push_back(false);
  }
  void close(char c) {
    out_ += c;
    need_comma_.pop_back();
    if (!need_comma_.empty()) need_comma_.back() = true;
  }
  void comma() {
    if (pending_value_) {
      pending_value_ = false;
      return;  // key already emitted the separator state
    }
    if (!need_comma_.empty()) {
      if (need_comma_.back()) out_ += ',';
      need_comma_.back() = true;
    }
  }
  void string_literal(const char* s) {
    out_ += '"';
    for (const char* p = s; *p; ++p) {
      switch (*p) {
        case '"': out_ += "\\\""; break;
        case '\\': out_ += "\\\\"; break;
        case '\n': out_ += "\\n"; break;
        case '\t': out_ += "\\t"; break;
        default: out_ += *p;
      }
    }
    out_ += '"';
  }

  std::string out_;
  std::vector<bool> need_comma_;
  bool pending_value_ = false;
};

void write_angles(JsonWriter& w, const AngleList& a) {
  w.begin_array();
  for (int i = 0; i < a.size(); ++i) w.value(a[i].str());
  w.end_array();
}

void write_index_triple(JsonWriter& w, const std::array<int, 3>& t) {
  w.begin_array();
  for (int idx : t) w.value(idx + 1);  // 1-based in all external output
  w.end_array();
}

void write_complex_array(JsonWriter& w, const std::vector<std::complex<double>>& v) {
  w.begin_array();
  for (const auto& z : v) {
    w.begin_array();
    w.value(z.real());
    w.value(z.imag());
    w.end_array();
  }
  w.end_array();
}

const char* character_name(VertexCharacter c) {
  switch (c) {
    case VertexCharacter::spacelike: return "spacelike";
    case VertexCharacter::lightlike: return "lightlike";
    case VertexCharacter::timelike: return "timelike";
  }
  return "?";
}

}  // namespace

std::string to_json(const Classification& c) {
  JsonWriter w;
  w.begin_object();
  w.key("angles");
  write_angles(w, c.angles);
  w.key("n");
  w.value(c.angles.dimension());
  w.key("verdict");
  w.value(to_string(c.verdict));
  w.key("compact");
  w.value(c.compact);
  w.key("double_cover_components");
  w.value(c.connectivity.components);
  w.key("strata");
  w.begin_array();
  for (const StratumReport& s : c.strata.singular) {
    w.begin_object();
    w.key("triple");
    write_index_triple(w, s.triple);
    w.key("theta");
    w.value(s.theta);
    w.key("k");
    if (s.matched_k)
      w.value(*s.matched_k);
    else
      w.null();
    w.end_object();
  }
  w.end_array();
  w.key("ideal_triples");
  w.begin_array();
  for (const auto& t : c.strata.ideal) write_index_triple(w, t);
  w.end_array();
  w.key("witness_noncompact");
  if (c.noncompact_witness) {
    w.begin_array();
    for (int idx : *c.noncompact_witness) w.value(idx + 1);
    w.end_array();
  } else {
    w.null();
  }
  w.end_object();
  return w.take();
}

std::string to_json(const TableReport& r) {
  JsonWriter w;
  w.begin_array();
  const auto& table = dm_table();
  for (size_t i = 0; i < r.rows.size(); ++i) {
    const RowResult& row = r.rows[i];
    w.begin_object();
    w.key("t");
    w.value(row.thurston_id);
    w.key("angles");
    write_angles(w, table[i].angles);
    w.key("n");
    w.value(table[i].dimension);
    w.key("computed");
    w.value(to_string(row.computed));
    w.key("expected");
    w.value(to_string(row.expected));
    w.key("match");
    w.value(row.match);
    w.end_object();
  }
  w.end_array();
  return w.take();
}

std::string to_json(const std::vector<SearchHit>& hits) {
  JsonWriter w;
  w.begin_array();
  for (const SearchHit& h : hits) {
    w.begin_object();
    w.key("triple");
    w.begin_array();
    for (const Rational& r : h.triple) w.value(r.str());
    w.end_array();
    w.key("k");
    w.value(h.k);
    w.key("cos_half_theta");
    w.value(h.cos_half_theta);
    w.end_object();
  }
  w.end_array();
  return w.take();
}

std::string to_json(const Unfolding& u) {
  JsonWriter w;
  w.begin_object();
  w.key("s");
  write_complex_array(w, u.s);
  w.key("x");
  write_complex_array(w, u.x);
  w.end_object();
  return w.take();
}

std::string to_json(const OrthoschemeReport& r) {
  JsonWriter w;
  w.begin_object();
  w.key("angles");
  write_angles(w, r.angles);
  w.key("n");
  w.value(r.angles.dimension());
  w.key("type");
  w.value(r.type.type);
  w.key("characters");
  w.begin_array();
  for (VertexCharacter c : r.type.characters) w.value(character_name(c));
  w.end_array();
  w.key("facets");
  w.begin_array();
  for (int f : r.type.facets) w.value(f + 1);
  w.end_array();
  w.key("relations");
  w.begin_array();
  const int fcount = r.relations.size();
  for (int i = 0; i < fcount; ++i) {
    for (int j = i + 1; j < fcount; ++j) {
      const FacetRelation& rel = r.relations.at(i, j);
      w.begin_object();
      w.key("i");
      w.value(r.relations.facets[i] + 1);
      w.key("j");
      w.value(r.relations.facets[j] + 1);
      w.key("kind");
      switch (rel.kind) {
        case FacetRelation::Kind::orthogonal: w.value("orthogonal"); break;
        case FacetRelation::Kind::angle:
          w.value("angle");
          w.key("theta");
          w.value(rel.theta);
          break;
        case FacetRelation::Kind::parallel: w.value("parallel"); break;
        case FacetRelation::Kind::ultraparallel:
          w.value("ultraparallel");
          w.key("distance");
          w.value(rel.distance);
          break;
      }
      w.end_object();
    }
  }
  w.end_array();
  w.key("coxeter");
  w.value(r.diagram.has_value());
  if (r.diagram) {
    w.key("diagram");
    w.begin_object();
    w.key("shape");
    w.value(r.diagram->shape == CoxeterDiagram::Shape::cycle ? "cycle" : "chain");
    w.key("edges");
    w.begin_array();
    for (const auto& e : r.diagram->edges) {
      w.begin_object();
      w.key("i");
      w.value(r.diagram->nodes[e.i] + 1);
      w.key("j");
      w.value(r.diagram->nodes[e.j] + 1);
      w.key("label");
      switch (e.kind) {
        case CoxeterDiagram::Edge::Kind::finite: w.value(e.label); break;
        case CoxeterDiagram::Edge::Kind::infinite: w.value("inf"); break;
        case CoxeterDiagram::Edge::Kind::dashed: w.value("dashed"); break;
      }
      w.end_object();
    }
    w.end_array();
    w.end_object();
  }
  w.key("compact");
  w.value(r.compactness.compact);
  w.key("finite_volume");
  w.value(r.compactness.finite_volume);
  w.key("witness_noncompact_run");
  if (r.compactness.witness) {
    w.begin_array();
    w.value(r.compactness.witness->first + 1);
    w.value(r.compactness.witness->second + 1);
    w.end_array();
  } else {
    w.null();
  }
  w.end_object();
  return w.take();
}

}  // namespace polyscheme
