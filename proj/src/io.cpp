#include "vk/io.hpp"

#include <cstdio>
#include <fstream>
#include <iterator>
#include <sstream>

namespace vk::io {

Json to_json(const Simplex& s) {
  Json j = Json::array();
  for (Vertex v : s) j.push_back(v);
  return j;
}

Simplex simplex_from_json(const Json& j) {
  if (!j.is_array()) throw Error("simplex must be a JSON array, got " + j.dump());
  std::vector<Vertex> vs;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw Error("vertex labels must be integers, got " + x.dump());
    vs.push_back(x.get<Vertex>());
  }
  return Simplex(vs);
}

Json complex_to_json(const Complex& c, const std::string& name) {
  Json j;
  j["name"] = name;
  j["facets"] = Json::array();
  for (const auto& f : c.facets()) j["facets"].push_back(to_json(f));
  return j;
}

NamedComplex complex_from_json(const Json& j) {
  NamedComplex out;
  const Json* facets = &j;
  if (j.is_object()) {
    if (!j.contains("facets")) throw Error("complex JSON lacks \"facets\"");
    facets = &j.at("facets");
    if (j.contains("name")) {
      if (!j.at("name").is_string()) throw Error("\"name\" must be a string");
      out.name = j.at("name").get<std::string>();
    }
  }
  if (!facets->is_array()) throw Error("\"facets\" must be an array");
  std::vector<Simplex> gens;
  for (const auto& f : *facets) gens.push_back(simplex_from_json(f));
  out.complex = gens.empty() ? Complex() : Complex(std::move(gens));
  return out;
}

std::string complex_to_text(const Complex& c, const std::string& name) {
  std::string out;
  if (!name.empty()) out += "# " + name + "\n";
  for (const auto& f : c.facets()) {
    for (std::size_t i = 0; i < f.size(); ++i) out += (i ? " " : "") + std::to_string(f[i]);
    out += "\n";
  }
  return out;
}

NamedComplex complex_from_text(const std::string& text) {
  NamedComplex out;
  std::istringstream in(text);
  std::string line;
  std::vector<Simplex> gens;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == '#') {
      if (out.name.empty() && gens.empty()) {
        auto rest = line.substr(start + 1);
        auto b = rest.find_first_not_of(' ');
        if (b != std::string::npos) out.name = rest.substr(b);
        while (!out.name.empty() && (out.name.back() == '\r' || out.name.back() == ' '))
          out.name.pop_back();
      }
      continue;
    }
    std::istringstream ls(line);
    std::vector<Vertex> vs;
    std::string tok;
    while (ls >> tok) {
      try {
        std::size_t used = 0;
        vs.push_back(std::stoi(tok, &used));
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw Error("line " + std::to_string(lineno) + ": bad vertex label '" + tok + "'");
      }
    }
    gens.emplace_back(vs);
  }
  out.complex = gens.empty() ? Complex() : Complex(std::move(gens));
  return out;
}

NamedComplex parse_complex(const std::string& text) {
  auto start = text.find_first_not_of(" \t\r\n");
  if (start != std::string::npos && (text[start] == '{' || text[start] == '[')) {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const Json::parse_error& e) {
      throw Error(std::string("malformed JSON: ") + e.what());
    }
    return complex_from_json(j);
  }
  return complex_from_text(text);
}

Json trace_to_json(const std::vector<MoveDescriptor>& trace) {
  Json j = Json::array();
  for (const auto& m : trace) {
    Json e;
    e["sigma"] = to_json(m.sigma);
    e["tau"] = to_json(m.tau);
    e["p"] = m.p();
    e["q"] = m.q();
    j.push_back(std::move(e));
  }
  return j;
}

std::vector<MoveDescriptor> trace_from_json(const Json& j) {
  if (j.is_object() && j.contains("trace")) return trace_from_json(j.at("trace"));
  if (!j.is_array()) throw Error("trace must be a JSON array");
  std::vector<MoveDescriptor> out;
  for (const auto& e : j) {
    if (!e.is_object() || !e.contains("sigma") || !e.contains("tau"))
      throw Error("trace entries need \"sigma\" and \"tau\"");
    MoveDescriptor m{simplex_from_json(e.at("sigma")), simplex_from_json(e.at("tau"))};
    if ((e.contains("p") && e.at("p") != m.p()) || (e.contains("q") && e.at("q") != m.q()))
      throw Error("move " + m.str() + " disagrees with its recorded (p,q)");
    out.push_back(std::move(m));
  }
  return out;
}

Json pair_chain_to_json(const PairChain& w) {
  Json j = Json::array();
  for (const auto& c : w) j.push_back(Json::array({to_json(c.first()), to_json(c.second())}));
  return j;
}

PairChain pair_chain_from_json(const Json& j, int dim) {
  if (!j.is_array()) throw Error("pair chain must be a JSON array");
  PairChain w(dim);
  for (const auto& c : j) {
    if (!c.is_array() || c.size() != 2) throw Error("pair cells are [[...],[...]]");
    w.toggle(PairCell(simplex_from_json(c[0]), simplex_from_json(c[1])));
  }
  return w;
}

Json report_to_json(const ObstructionReport& r) {
  Json j;
  j["r"] = r.r;
  j["vanishes"] = r.vanishes;
  j["witness"] = r.witness ? pair_chain_to_json(*r.witness) : Json(nullptr);
  j["pairing"] = r.pairing;
  return j;
}

Json cochain_to_json(const IntersectionCochain& phi) {
  Json j = Json::array();
  for (std::size_t i = 0; i < phi.cells.size(); ++i) {
    Json e;
    e["pair"] = Json::array({to_json(phi.cells[i].first()), to_json(phi.cells[i].second())});
    e["value"] = phi.values.get(i) ? 1 : 0;
    j.push_back(std::move(e));
  }
  return j;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace vk::io
