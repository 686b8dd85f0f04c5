#include "reeblab/handle_sim.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "reeblab/error.hpp"
#include "reeblab/omega.hpp"

namespace reeblab {

namespace {

std::string cid(std::size_t id) { return "c" + std::to_string(id); }

}  // namespace

int HandleEvent::index() const noexcept {
  switch (kind) {
    case Kind::birth: return 0;
    case Kind::genus_up:
    case Kind::merge: return 1;
    case Kind::split:
    case Kind::genus_down: return 2;
    case Kind::death: return 3;
  }
  return -1;
}

int SurfaceState::total_genus() const {
  int g = 0;
  for (const auto& [id, c] : components_) g += c.genus;
  return g;
}

std::string SurfaceState::to_string() const {
  std::string s = "{";
  bool first = true;
  for (const auto& [id, c] : components_) {
    if (!first) s += ", ";
    first = false;
    s += cid(id) + ": " + std::to_string(c.genus);
  }
  return s + "}";
}

StepResult apply_event(const SurfaceState& s, const HandleEvent& e) {
  StepResult r{s, {e.index(), {}}};
  auto& comps = r.state.components_;
  const std::size_t v = r.state.next_vertex_++;
  auto take = [&](std::size_t id) {
    auto it = comps.find(id);
    if (it == comps.end()) throw Error("no live component " + cid(id));
    auto c = it->second;
    comps.erase(it);
    r.vertex.below.push_back(c.vertex);
    return c;
  };
  auto fresh = [&](int genus) { comps[r.state.next_id_++] = {genus, v}; };

  switch (e.kind) {
    case HandleEvent::Kind::birth:
      fresh(0);
      break;
    case HandleEvent::Kind::genus_up: {
      auto c = take(e.a);
      comps[e.a] = {c.genus + 1, v};
      break;
    }
    case HandleEvent::Kind::merge: {
      if (e.a == e.b) throw Error("cannot merge " + cid(e.a) + " with itself");
      if (!comps.contains(e.a)) throw Error("no live component " + cid(e.a));
      if (!comps.contains(e.b)) throw Error("no live component " + cid(e.b));
      auto c1 = take(e.a);
      auto c2 = take(e.b);
      fresh(c1.genus + c2.genus);
      break;
    }
    case HandleEvent::Kind::split: {
      if (!comps.contains(e.a)) throw Error("no live component " + cid(e.a));
      const int g = comps.at(e.a).genus;
      if (e.g1 < 0 || e.g2 < 0 || e.g1 + e.g2 != g)
        throw Error("partition (" + std::to_string(e.g1) + "," + std::to_string(e.g2) +
                    ") does not add up to the genus " + std::to_string(g) + " of " + cid(e.a));
      take(e.a);
      fresh(e.g1);
      fresh(e.g2);
      break;
    }
    case HandleEvent::Kind::genus_down: {
      if (!comps.contains(e.a)) throw Error("no live component " + cid(e.a));
      if (comps.at(e.a).genus < 1)
        throw Error("genus decrement on the sphere " + cid(e.a));
      auto c = take(e.a);
      comps[e.a] = {c.genus - 1, v};
      break;
    }
    case HandleEvent::Kind::death: {
      if (!comps.contains(e.a)) throw Error("no live component " + cid(e.a));
      if (comps.at(e.a).genus != 0)
        throw Error("3-handle on " + cid(e.a) + " of genus " +
                    std::to_string(comps.at(e.a).genus));
      take(e.a);
      break;
    }
  }
  return r;
}

RunResult run(const HandleSequence& seq) {
  RunResult out;
  SurfaceState s;
  std::vector<int> indices;
  std::vector<ReebGraph::Edge> edges;
  for (std::size_t i = 0; i < seq.events.size(); ++i) {
    const auto& e = seq.events[i];
    if (i > 0 && s.empty())
      throw Error("event " + std::to_string(i + 1) + " (" + to_string(e) +
                  "): the level set is already empty");
    StepResult step;
    try {
      step = apply_event(s, e);
    } catch (const Error& err) {
      throw Error("event " + std::to_string(i + 1) + " (" + to_string(e) + "): " + err.what() +
                  "; state " + s.to_string());
    }
    const std::size_t v = indices.size();
    indices.push_back(step.vertex.index);
    for (auto b : step.vertex.below) edges.emplace_back(b, v);
    ++out.k[static_cast<std::size_t>(step.vertex.index)];
    s = std::move(step.state);
  }
  out.closed = !seq.events.empty() && s.empty();
  out.final_state = s;
  out.graph = ReebGraph(3, std::move(indices), std::move(edges));
  if (out.closed) {
    if (!out.graph.connected()) throw Error("closed sequence gives a disconnected Reeb graph");
    validate(out.graph);
    out.census = degree_census(out.graph);
    return out;
  }
  // open sequences leave dangling vertices, so only raw counts make sense
  auto& c = out.census;
  c.by_index.assign(4, 0);
  for (std::size_t v = 0; v < out.graph.vertex_count(); ++v) {
    const auto d = out.graph.degree(v);
    if (d >= c.by_degree.size()) c.by_degree.resize(d + 1, 0);
    ++c.by_degree[d];
    ++c.by_index[static_cast<std::size_t>(out.graph.index(v))];
    c.max_degree = std::max(c.max_degree, d);
  }
  return out;
}

std::string to_string(const HandleEvent& e) {
  switch (e.kind) {
    case HandleEvent::Kind::birth: return "h0";
    case HandleEvent::Kind::genus_up: return "h1 +g @" + cid(e.a);
    case HandleEvent::Kind::merge: return "h1 merge @" + cid(e.a) + " @" + cid(e.b);
    case HandleEvent::Kind::split:
      return "h2 split @" + cid(e.a) + " (" + std::to_string(e.g1) + "," + std::to_string(e.g2) +
             ")";
    case HandleEvent::Kind::genus_down: return "h2 -g @" + cid(e.a);
    case HandleEvent::Kind::death: return "h3 @" + cid(e.a);
  }
  return "?";
}

std::string to_script(const HandleSequence& seq) {
  std::string out;
  for (const auto& e : seq.events) out += to_string(e) + "\n";
  return out;
}

namespace {

class ScriptLine {
 public:
  ScriptLine(std::string_view text, std::size_t offset) : text_(text), offset_(offset) {}

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, offset_ + pos_);
  }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  std::string_view word() {
    skip_space();
    auto start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
           text_[pos_] != '(')
      ++pos_;
    return text_.substr(start, pos_ - start);
  }
  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  int integer() {
    skip_space();
    int v = 0;
    auto [p, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), v);
    if (ec != std::errc{}) fail("expected an integer");
    pos_ = static_cast<std::size_t>(p - text_.data());
    return v;
  }
  std::size_t component() {
    auto w = word();
    if (w.size() < 3 || w[0] != '@' || w[1] != 'c') fail("expected a component like @c1");
    std::size_t id = 0;
    auto [p, ec] = std::from_chars(w.data() + 2, w.data() + w.size(), id);
    if (ec != std::errc{} || p != w.data() + w.size() || id == 0)
      fail("bad component id '" + std::string(w) + "'");
    return id;
  }

 private:
  std::string_view text_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

}  // namespace

HandleSequence parse_script(std::string_view text) {
  HandleSequence seq;
  std::size_t offset = 0;
  while (offset <= text.size()) {
    auto nl = text.find('\n', offset);
    if (nl == std::string_view::npos) nl = text.size();
    auto line = text.substr(offset, nl - offset);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    ScriptLine in(line, offset);
    if (!in.at_end()) {
      auto head = in.word();
      HandleEvent e;
      if (head == "h0") {
        e = HandleEvent::h0();
      } else if (head == "h1") {
        auto op = in.word();
        if (op == "+g")
          e = HandleEvent::up(in.component());
        else if (op == "merge") {
          auto a = in.component();
          e = HandleEvent::merge_of(a, in.component());
        } else
          in.fail("expected '+g' or 'merge' after h1");
      } else if (head == "h2") {
        auto op = in.word();
        if (op == "-g")
          e = HandleEvent::down(in.component());
        else if (op == "split") {
          auto a = in.component();
          in.expect('(');
          int g1 = in.integer();
          in.expect(',');
          int g2 = in.integer();
          in.expect(')');
          e = HandleEvent::split_of(a, g1, g2);
        } else
          in.fail("expected '-g' or 'split' after h2");
      } else if (head == "h3") {
        e = HandleEvent::h3(in.component());
      } else {
        in.fail("unknown event '" + std::string(head) + "'");
      }
      if (!in.at_end()) in.fail("trailing text");
      seq.events.push_back(e);
    }
    offset = nl + 1;
  }
  return seq;
}

Thm45Report thm45_omega_consistency(const HandleSequence& seq, const Presentation& p) {
  const auto res = run(seq);
  if (!res.closed) throw Error("Omega check needs a closed sequence");
  if (res.k[0] != 1 || res.k[3] != 1)
    throw Error("Omega check needs exactly one minimum and one maximum");
  const std::size_t k1 = res.k[1], k2 = res.k[2];
  if (p.rank() != k1 || p.relator_count() != k2)
    throw Error("presentation has " + std::to_string(p.rank()) + " generators and " +
                std::to_string(p.relator_count()) + " relators, the sequence has k1 = " +
                std::to_string(k1) + " and k2 = " + std::to_string(k2));

  Thm45Report rep;
  rep.k1 = k1;
  rep.beta1 = cycle_rank(res.graph);
  const auto r = static_cast<std::size_t>(rep.beta1);
  rep.bound = std::max<std::size_t>(1, k1 - r);

  std::size_t ones = 0;
  for (const auto& e : seq.events) {
    if (e.index() == 1) ++ones;
    if (e.index() == 2) rep.ones_before.push_back(ones);
  }

  rep.mechanism = true;
  for (std::size_t i = 0; i < r && i < rep.ones_before.size(); ++i)
    if (rep.ones_before[i] > k1 - r + i) {
      rep.mechanism = false;
      rep.failures.push_back("2-handle " + std::to_string(i + 1) + " follows " +
                             std::to_string(rep.ones_before[i]) + " 1-handles, more than " +
                             std::to_string(k1 - r + i));
    }

  rep.windows = true;
  for (std::size_t i = 0; i < k2; ++i) {
    const auto sup = support(p.relator(i));
    if (!sup.empty() && *sup.rbegin() >= rep.ones_before[i]) {
      rep.windows = false;
      rep.failures.push_back("relator " + std::to_string(i + 1) + " uses generator " +
                             p.alphabet().name(*sup.rbegin()) + " but only " +
                             std::to_string(rep.ones_before[i]) + " 1-handles precede it");
    }
  }

  bool omega_ok = true;
  if (k2 > 0) {
    rep.omega = omega_fixed(p);
    if (rep.omega > rep.bound) {
      omega_ok = false;
      rep.failures.push_back("omega " + std::to_string(rep.omega) + " exceeds " +
                             std::to_string(rep.bound));
    }
  }
  rep.pass = rep.mechanism && rep.windows && omega_ok;
  return rep;
}

}  // namespace reeblab
