#include "flagrep/io.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

namespace flagrep {

using nlohmann::json;

namespace {

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

template <class F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

json vertex_list(const std::vector<Vertex>& vs) {
  json out = json::array();
  for (const Vertex& v : vs) out.push_back({v.rank, v.color});
  return out;
}

json tree_json(const Tuple& a, const MacaulayTree* t) {
  json nodes = json::array();
  if (t) {
    for (int x = 0; x < t->size(); ++x) {
      json nd;
      nd["id"] = x;
      json children = json::array();
      if (t->left(x) >= 0) children.push_back(t->left(x));
      if (t->right(x) >= 0) children.push_back(t->right(x));
      nd["children"] = children;
      if (x == 0) {
        nd["kind"] = "root";
        nd["label"] = t->type();
      } else if (t->is_trivalent(x)) {
        nd["kind"] = "trivalent";
        nd["label"] = t->color(x);
      } else {
        nd["kind"] = "terminal";
        nd["label"] = t->label(x);
      }
      nodes.push_back(nd);
    }
  }
  return json{{"a", a}, {"nodes", nodes}};
}

GeneralizedRep rep_from(const json& j) {
  Tuple a = j.at("a").get<Tuple>();
  const json& nodes = j.at("nodes");
  if (nodes.empty()) return GeneralizedRep::trivial(a);
  std::vector<TreeNode> raw(nodes.size());
  std::map<int, int> index;
  for (std::size_t i = 0; i < nodes.size(); ++i) index[nodes[i].at("id").get<int>()] = static_cast<int>(i);
  int root = -1;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const json& nd = nodes[i];
    const std::string kind = nd.at("kind").get<std::string>();
    std::vector<int> children;
    for (const json& c : nd.value("children", json::array())) {
      auto it = index.find(c.get<int>());
      if (it == index.end()) throw ParseError("tree: unknown child id " + c.dump());
      children.push_back(it->second);
    }
    TreeNode& t = raw[i];
    if (kind == "root") {
      if (children.size() != 1) throw ParseError("tree: root needs exactly one child");
      t.kind = NodeKind::Root;
      t.left = children[0];
      root = static_cast<int>(i);
    } else if (kind == "trivalent") {
      if (children.size() != 2) throw ParseError("tree: trivalent node needs two children");
      t.kind = NodeKind::Trivalent;
      t.color = nd.at("label").get<int>();
      t.left = children[0];
      t.right = children[1];
    } else if (kind == "terminal") {
      if (!children.empty()) throw ParseError("tree: terminal node with children");
      t.kind = NodeKind::Terminal;
      t.label = nd.at("label").get<Tuple>();
    } else {
      throw ParseError("tree: unknown node kind '" + kind + "'");
    }
  }
  if (root < 0) throw ParseError("tree: no root node");
  if (root != 0) {
    // move the root to position 0
    std::vector<int> perm(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) perm[i] = static_cast<int>(i);
    std::swap(perm[0], perm[root]);
    std::vector<int> inv(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) inv[perm[i]] = static_cast<int>(i);
    std::vector<TreeNode> moved(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
      TreeNode t = raw[perm[i]];
      if (t.left >= 0) t.left = inv[t.left];
      if (t.right >= 0) t.right = inv[t.right];
      moved[i] = t;
    }
    raw = std::move(moved);
  }
  return GeneralizedRep::of(MacaulayTree(a, raw));
}

json fine_json(const FineVector& f, bool with_flag) {
  json entries = json::array();
  for (const Tuple& b : f.keys()) entries.push_back({b, f.at(b)});
  json out{{"type", f.type()}, {"entries", entries}};
  if (with_flag) {
    json flag = json::object();
    for (const Tuple& b : f.keys()) {
      bool zero_one = true;
      std::string key;
      for (std::size_t i = 0; i < b.size(); ++i) {
        if (b[i] > 1) zero_one = false;
        if (b[i] == 1) key += std::to_string(i + 1);
      }
      if (zero_one) flag[key] = f.at(b);
    }
    out["flag"] = flag;
  }
  return out;
}

json cert_json(const DecompositionCertificate& c) {
  json j;
  j["kind"] = c.kind == DecompositionCertificate::Kind::RibBase ? "base" : "shed";
  if (c.vertex) j["vertex"] = {c.vertex->rank, c.vertex->color};
  if (c.sub_a) j["link_type"] = *c.sub_a;
  if (c.deletion) j["deletion"] = cert_json(*c.deletion);
  if (c.link) j["link"] = cert_json(*c.link);
  if (c.non_covering) j["non_covering"] = true;
  return j;
}

}  // namespace

std::string complex_to_json(const ColoredComplex& c) {
  json facets = json::array();
  for (Mask f : c.facets()) facets.push_back(vertex_list(c.vertices_of(f)));
  return dump(json{{"type", c.type()}, {"lambda", c.lambda()}, {"facets", facets}});
}

ColoredComplex complex_from_json(const std::string& text) {
  json j = parse(text);
  return guarded("complex", [&] {
    Tuple a = j.at("type").get<Tuple>();
    Tuple lambda = j.at("lambda").get<Tuple>();
    std::vector<std::vector<Vertex>> facets;
    for (const json& f : j.at("facets")) {
      std::vector<Vertex> vs;
      for (const json& v : f) {
        if (!v.is_array() || v.size() != 2) throw ParseError("complex: vertices are [rank, color] pairs");
        vs.push_back({v[0].get<int>(), v[1].get<int>()});
      }
      facets.push_back(std::move(vs));
    }
    return ColoredComplex::from_facets(a, lambda, facets);
  });
}

std::string multicomplex_to_json(const ColoredMulticomplex& m) {
  json caps = json::array();
  for (int c = 1; c <= m.n(); ++c) {
    const int first = m.first_var(c);
    std::vector<int> cs(m.caps().begin() + first, m.caps().begin() + first + m.vars_per_color()[c - 1]);
    bool unbounded = std::all_of(cs.begin(), cs.end(), [](int v) { return v == kUnbounded; });
    caps.push_back(unbounded ? json(nullptr) : json(cs));
  }
  json out{{"n", m.n()}, {"vars", m.vars_per_color()}, {"caps", caps}, {"monomials", m.maximal_monomials()}};
  if (!m.type().empty()) out["type"] = m.type();
  return dump(out);
}

ColoredMulticomplex multicomplex_from_json(const std::string& text) {
  json j = parse(text);
  return guarded("multicomplex", [&] {
    std::vector<int> vars = j.at("vars").get<std::vector<int>>();
    if (j.contains("n") && j.at("n").get<int>() != static_cast<int>(vars.size()))
      throw ParseError("multicomplex: n disagrees with vars");
    std::vector<int> caps;
    const json& cj = j.at("caps");
    if (cj.size() != vars.size()) throw ParseError("multicomplex: one caps entry per color");
    for (std::size_t c = 0; c < vars.size(); ++c) {
      if (cj[c].is_null()) {
        caps.insert(caps.end(), vars[c], kUnbounded);
      } else {
        std::vector<int> cs = cj[c].get<std::vector<int>>();
        if (cs.size() != static_cast<std::size_t>(vars[c])) throw ParseError("multicomplex: caps length mismatch");
        caps.insert(caps.end(), cs.begin(), cs.end());
      }
    }
    std::vector<Monomial> mons = j.at("monomials").get<std::vector<Monomial>>();
    Tuple type = j.contains("type") ? j.at("type").get<Tuple>() : Tuple{};
    return ColoredMulticomplex(vars, caps, mons, type);
  });
}

std::string tree_to_json(const MacaulayTree& t) { return dump(tree_json(t.type(), &t)); }

MacaulayTree tree_from_json(const std::string& text) {
  GeneralizedRep r = rep_from_json(text);
  if (r.is_trivial()) throw ParseError("tree: empty node list");
  return *r.tree;
}

std::string rep_to_json(const GeneralizedRep& r) {
  return dump(tree_json(r.type, r.tree ? &*r.tree : nullptr));
}

GeneralizedRep rep_from_json(const std::string& text) {
  json j = parse(text);
  return guarded("tree", [&] { return rep_from(j); });
}

std::string trees_to_json(const std::vector<MacaulayTree>& ts) {
  json arr = json::array();
  for (const MacaulayTree& t : ts) arr.push_back(tree_json(t.type(), &t));
  return dump(json{{"count", ts.size()}, {"trees", arr}});
}

std::string fine_vector_to_json(const FineVector& f, bool with_flag) { return dump(fine_json(f, with_flag)); }

FineVector fine_vector_from_json(const std::string& text, std::optional<Tuple> type_hint) {
  json j = parse(text);
  return guarded("fine vector", [&] {
    if (j.contains("entries")) {
      Tuple a = j.contains("type") ? j.at("type").get<Tuple>() : type_hint.value_or(Tuple{});
      if (a.empty()) throw ParseError("fine vector: missing type");
      FineVector f(a);
      for (const json& e : j.at("entries")) {
        Tuple b = e.at(0).get<Tuple>();
        require_same_length(a, b, "fine vector entry");
        if (!leq(b, a)) {
          if (e.at(1).get<Count>() != 0) throw ParseError("fine vector: nonzero entry outside the box");
          continue;
        }
        f.set(b, e.at(1).get<Count>());
      }
      return f;
    }
    const json& flag = j.contains("flag") ? j.at("flag") : j;
    if (!flag.is_object()) throw ParseError("fine vector: expected an object");
    int d = 0;
    for (auto it = flag.begin(); it != flag.end(); ++it)
      for (char ch : it.key()) {
        if (ch < '1' || ch > '9') throw ParseError("flag vector: keys are strings of digits 1-9");
        d = std::max(d, ch - '0');
      }
    if (type_hint) {
      if (static_cast<int>(type_hint->size()) < d) throw ParseError("flag vector: index beyond the given type");
      d = static_cast<int>(type_hint->size());
    }
    if (d == 0) throw ParseError("flag vector: cannot infer the dimension");
    FineVector f(Tuple(d, 1));
    for (auto it = flag.begin(); it != flag.end(); ++it) {
      Tuple b(d, 0);
      for (char ch : it.key()) {
        if (b[ch - '1']) throw ParseError("flag vector: repeated index in key '" + it.key() + "'");
        b[ch - '1'] = 1;
      }
      f.set(b, it.value().get<Count>());
    }
    return f;
  });
}

std::string feasibility_to_json(const Feasibility& r) {
  json w = json::array();
  for (const auto& [b, rep] : r.witnesses) w.push_back(json{{"b", b}, {"tree", tree_json(rep.type, rep.tree ? &*rep.tree : nullptr)}});
  json out{{"feasible", r.feasible}, {"witnesses", w}};
  if (!r.feasible && !r.reason.empty()) out["reason"] = r.reason;
  return dump(out);
}

std::string certificate_to_json(const DecompositionResult& r) {
  json out{{"ok", r.ok}};
  if (r.ok && r.certificate) out["certificate"] = cert_json(*r.certificate);
  return dump(out);
}

std::string shedding_to_json(const SheddingTree& s) {
  json j = tree_json(s.shape.type(), &s.shape);
  json terminals = json::array();
  for (int u : s.shape.leaves()) {
    const SheddingTerminal& info = s.terminals[u];
    json parts = json::array();
    for (Mask m : info.parts) parts.push_back(vertex_list(info.complex.vertices_of(m)));
    json facets = json::array();
    for (Mask f : info.complex.facets()) facets.push_back(vertex_list(info.complex.vertices_of(f)));
    terminals.push_back(json{{"id", u}, {"a", info.a}, {"lambda", info.lambda}, {"parts", parts}, {"facets", facets}});
  }
  j["terminals"] = terminals;
  json splits = json::array();
  for (const Vertex& v : s.splits) splits.push_back({v.rank, v.color});
  j["splits"] = splits;
  return dump(j);
}

std::string cross_report_to_json(const CrossReport& r) {
  auto list = [](const std::vector<FineVector>& fs) {
    json arr = json::array();
    for (const FineVector& f : fs) arr.push_back(fine_json(f, false));
    return arr;
  };
  return dump(json{{"match", r.match},
                   {"achievable", r.achievable},
                   {"feasible", r.feasible},
                   {"only_achievable", list(r.only_achievable)},
                   {"only_feasible", list(r.only_feasible)}});
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + p.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::filesystem::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + p.string());
  out << text;
}

std::filesystem::path cache_dir() {
  if (const char* d = std::getenv("FLAGREP_CACHE_DIR"); d && *d) return d;
  if (const char* d = std::getenv("XDG_CACHE_HOME"); d && *d) return std::filesystem::path(d) / "flagrep";
  if (const char* h = std::getenv("HOME"); h && *h) return std::filesystem::path(h) / ".cache" / "flagrep";
  return std::filesystem::temp_directory_path() / "flagrep";
}

std::set<FineVector> cached_achievable_fine_f(const Tuple& a, const Tuple& lambda_max) {
  auto join = [](const Tuple& t) {
    std::string s;
    for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "-" : "") + std::to_string(t[i]);
    return s;
  };
  OracleFilter flt;
  flt.all_colors = true;
  const std::filesystem::path file = cache_dir() / ("achievable_" + join(a) + "_" + join(lambda_max) + "_" + flt.key() + ".json");
  std::error_code ec;
  if (std::filesystem::exists(file, ec)) {
    try {
      json j = json::parse(read_file(file));
      std::set<FineVector> out;
      for (const json& e : j.at("vectors")) out.insert(fine_vector_from_json(e.dump()));
      return out;
    } catch (const std::exception&) {
      // stale or corrupt; recompute
    }
  }
  std::set<FineVector> out = achievable_fine_f(a, lambda_max);
  json arr = json::array();
  for (const FineVector& f : out) arr.push_back(fine_json(f, false));
  std::filesystem::create_directories(file.parent_path(), ec);
  if (!ec) {
    try {
      write_file(file, dump(json{{"type", a}, {"lambda_max", lambda_max}, {"vectors", arr}}));
    } catch (const std::exception&) {
    }
  }
  return out;
}

}  // namespace flagrep
