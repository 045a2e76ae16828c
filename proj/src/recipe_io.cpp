#include "wtd/recipe_io.hpp"

#include <map>
#include <sstream>

#include "wtd/errors.hpp"

namespace wtd {
namespace {

enum class Section { none, h, mvc, step3, hprime, step4 };

struct NamedEdge {
  std::string a, b;
  std::size_t line;
};

struct MvcLine {
  std::vector<std::string> members;
  std::string name;
  std::size_t line;
};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> tokens(std::string_view s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ' ' || c == '\t' || c == ',' || c == '\r') {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

std::string checked_name(const std::string& t, std::size_t line) {
  if (!is_plain_name(t)) throw ParseError("invalid vertex name '" + t + "'", line);
  return t;
}

std::vector<NamedEdge> edge_tokens(std::string_view s, std::size_t line) {
  std::vector<NamedEdge> out;
  for (const std::string& t : tokens(s)) {
    const auto dash = t.find('-');
    if (dash == std::string::npos || t.find('-', dash + 1) != std::string::npos)
      throw ParseError("expected an edge u-v, got '" + t + "'", line);
    out.push_back({checked_name(t.substr(0, dash), line), checked_name(t.substr(dash + 1), line), line});
  }
  return out;
}

class NameTable {
 public:
  bool has(const std::string& name) const { return ids_.contains(name); }
  int id(const std::string& name, std::size_t line) const {
    auto it = ids_.find(name);
    if (it == ids_.end()) throw ParseError("unknown vertex '" + name + "'", line);
    return it->second;
  }
  int add(const std::string& name, std::size_t line) {
    if (!ids_.emplace(name, static_cast<int>(names_.size())).second)
      throw ParseError("vertex name '" + name + "' used twice", line);
    names_.push_back(name);
    return static_cast<int>(names_.size()) - 1;
  }
  const std::vector<std::string>& names() const { return names_; }

 private:
  std::map<std::string, int> ids_;
  std::vector<std::string> names_;
};

void add_edge_or_throw(Graph& g, int u, int v, std::size_t line) {
  try {
    g.add_edge(u, v);
  } catch (const std::exception& e) {
    throw ParseError(e.what(), line);
  }
}

}  // namespace

bool is_plain_name(std::string_view name) {
  if (name.empty()) return false;
  for (char c : name)
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == ',' || c == '-' || c == ':' || c == ';' ||
        c == '{' || c == '}' || c == '>' || c == '#')
      return false;
  return true;
}

W2Recipe parse_recipe(std::string_view text) {
  Section section = Section::none;
  bool seen[6] = {};
  std::vector<std::pair<std::string, std::size_t>> h_declared, hp_declared;
  std::vector<NamedEdge> h_edges, step3, hp_edges, step4;
  std::vector<MvcLine> mvc;

  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    if (const auto colon = line.find(':'); colon != std::string_view::npos) {
      const std::string_view head = trim(line.substr(0, colon));
      const std::string_view rest = line.substr(colon + 1);
      if (head == "H") section = Section::h;
      else if (head == "MVC") section = Section::mvc;
      else if (head == "STEP3") section = Section::step3;
      else if (head == "HPRIME") section = Section::hprime;
      else if (head == "STEP4") section = Section::step4;
      else throw ParseError("unknown section '" + std::string(head) + "'", line_no);
      if (seen[static_cast<int>(section)]) throw ParseError("section " + std::string(head) + " repeated", line_no);
      seen[static_cast<int>(section)] = true;
      if (section == Section::h || section == Section::hprime) {
        auto& declared = section == Section::h ? h_declared : hp_declared;
        for (const std::string& t : tokens(rest)) declared.emplace_back(checked_name(t, line_no), line_no);
      } else if (!trim(rest).empty()) {
        throw ParseError("unexpected text after " + std::string(head) + ":", line_no);
      }
      continue;
    }

    switch (section) {
      case Section::none:
        throw ParseError("content before the first section", line_no);
      case Section::h:
        for (auto& e : edge_tokens(line, line_no)) h_edges.push_back(std::move(e));
        break;
      case Section::step3:
        for (auto& e : edge_tokens(line, line_no)) step3.push_back(std::move(e));
        break;
      case Section::hprime:
        for (auto& e : edge_tokens(line, line_no)) hp_edges.push_back(std::move(e));
        break;
      case Section::step4:
        for (auto& e : edge_tokens(line, line_no)) step4.push_back(std::move(e));
        break;
      case Section::mvc: {
        const auto arrow = line.find("->");
        if (arrow == std::string_view::npos) throw ParseError("expected 'members -> name'", line_no);
        MvcLine m;
        for (const std::string& t : tokens(line.substr(0, arrow))) m.members.push_back(checked_name(t, line_no));
        const auto name = tokens(line.substr(arrow + 2));
        if (name.size() != 1) throw ParseError("expected one vertex name after '->'", line_no);
        m.name = checked_name(name.front(), line_no);
        m.line = line_no;
        if (m.members.empty()) throw ParseError("empty cover", line_no);
        mvc.push_back(std::move(m));
        break;
      }
    }
  }
  if (!seen[static_cast<int>(Section::h)]) throw ParseError("missing H: section", line_no);
  if (!seen[static_cast<int>(Section::mvc)]) throw ParseError("missing MVC: section", line_no);

  NameTable h_names;
  for (const auto& [name, line] : h_declared) h_names.add(name, line);
  const bool h_listed = !h_declared.empty();
  for (const NamedEdge& e : h_edges)
    for (const std::string* s : {&e.a, &e.b})
      if (!h_names.has(*s)) {
        if (h_listed) throw ParseError("edge uses undeclared H vertex '" + *s + "'", e.line);
        h_names.add(*s, e.line);
      }

  W2Recipe r;
  r.h = Graph(static_cast<int>(h_names.names().size()));
  for (const NamedEdge& e : h_edges) add_edge_or_throw(r.h, h_names.id(e.a, e.line), h_names.id(e.b, e.line), e.line);

  NameTable all = h_names;
  for (const MvcLine& m : mvc) {
    VertexSet cover;
    for (const std::string& s : m.members) {
      const int id = h_names.id(s, m.line);
      if (cover.contains(id)) throw ParseError("vertex '" + s + "' repeated in cover", m.line);
      cover = cover.with(id);
    }
    r.mvc_vertices.push_back({cover, all.add(m.name, m.line)});
  }

  NameTable hp_names;
  for (const auto& [name, line] : hp_declared) hp_names.add(name, line);
  const bool hp_listed = !hp_declared.empty();
  for (const NamedEdge& e : hp_edges)
    for (const std::string* s : {&e.a, &e.b})
      if (!hp_names.has(*s)) {
        if (hp_listed) throw ParseError("edge uses undeclared H' vertex '" + *s + "'", e.line);
        hp_names.add(*s, e.line);
      }
  if (!hp_names.names().empty()) {
    Graph hp(static_cast<int>(hp_names.names().size()));
    for (const NamedEdge& e : hp_edges) add_edge_or_throw(hp, hp_names.id(e.a, e.line), hp_names.id(e.b, e.line), e.line);
    r.h_prime = std::move(hp);
    for (const std::string& name : hp_names.names()) all.add(name, 0);
  }

  for (const NamedEdge& e : step3) r.step3_edges.emplace_back(all.id(e.a, e.line), all.id(e.b, e.line));
  for (const NamedEdge& e : step4) r.step4_edges.emplace_back(all.id(e.a, e.line), all.id(e.b, e.line));
  r.labels = all.names();
  return r;
}

std::string write_recipe(const W2Recipe& r) {
  auto name = [&](int v) {
    std::string s = r.labels.empty() ? std::to_string(v) : r.labels.at(static_cast<std::size_t>(v));
    if (!is_plain_name(s)) throw std::invalid_argument("vertex name '" + s + "' cannot be written in a recipe");
    return s;
  };
  auto edge_line = [&](const EdgeSet& edges, int shift, bool h_last) {
    std::string line;
    for (const Edge& e : edges) {
      if (!line.empty()) line += ' ';
      line += h_last ? name(e.v + shift) + "-" + name(e.u + shift) : name(e.u + shift) + "-" + name(e.v + shift);
    }
    return line.empty() ? line : line + "\n";
  };

  std::string out = "H:";
  for (int v = 0; v < r.h_order(); ++v) out += " " + name(v);
  out += "\n" + edge_line(r.h.edges(), 0, false);
  out += "MVC:\n";
  for (const auto& cv : r.mvc_vertices) {
    std::string members;
    for (int s : cv.cover) members += (members.empty() ? "" : ",") + name(s);
    out += members + " -> " + name(cv.vertex) + "\n";
  }
  if (!r.step3_edges.empty()) out += "STEP3:\n" + edge_line(r.step3_edges, 0, false);
  if (r.h_prime) {
    out += "HPRIME:";
    for (int v = 0; v < r.h_prime->order(); ++v) out += " " + name(r.h_prime_offset() + v);
    out += "\n" + edge_line(r.h_prime->edges(), r.h_prime_offset(), false);
  }
  if (!r.step4_edges.empty()) out += "STEP4:\n" + edge_line(r.step4_edges, 0, true);
  return out;
}

}  // namespace wtd
