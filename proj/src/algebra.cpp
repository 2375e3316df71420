#include "hallbridge/algebra.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <tuple>

namespace hb {

namespace {

constexpr int kMaxPaths = 20000;

std::vector<std::vector<std::string>> tokenize(const std::string& text) {
  std::vector<std::vector<std::string>> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::string spaced;
    for (char c : line) {
      if (c == '=') spaced += " = ";
      else spaced += c;
    }
    std::istringstream ls(spaced);
    std::vector<std::string> toks;
    std::string t;
    while (ls >> t) toks.push_back(t);
    if (!toks.empty()) lines.push_back(std::move(toks));
  }
  return lines;
}

int parse_int(const std::string& s, const char* what) {
  try {
    size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError(std::string("expected integer for ") + what + ", got '" + s + "'");
  }
}

}  // namespace

Algebra Algebra::parse(const std::string& text) {
  Algebra alg;
  bool saw_q = false, saw_v = false;
  std::map<std::string, int> arrow_by_name;

  for (auto& toks : tokenize(text)) {
    if (toks[0] == "q") {
      if (toks.size() != 3 || toks[1] != "=") throw ParseError("expected: q = <prime>");
      int q = parse_int(toks[2], "q");
      if (q != 2 && q != 3 && q != 5 && q != 7)
        throw ParseError("q must be one of the primes 2, 3, 5, 7");
      alg.q_ = unsigned(q);
      saw_q = true;
    } else if (toks[0] == "vertices") {
      if (toks.size() != 3 || toks[1] != "=") throw ParseError("expected: vertices = <n>");
      alg.nv_ = parse_int(toks[2], "vertices");
      if (alg.nv_ < 1) throw ParseError("vertex count must be positive");
      saw_v = true;
    } else if (toks[0] == "arrow") {
      if (!saw_v) throw ParseError("arrow before vertices line");
      if (toks.size() != 4) throw ParseError("expected: arrow <name> <source> <target>");
      int s = parse_int(toks[2], "arrow source"), t = parse_int(toks[3], "arrow target");
      if (s < 1 || s > alg.nv_ || t < 1 || t > alg.nv_)
        throw ParseError("arrow endpoint out of range: " + toks[1]);
      if (arrow_by_name.count(toks[1])) throw ParseError("duplicate arrow name: " + toks[1]);
      arrow_by_name[toks[1]] = int(alg.arrows_.size());
      alg.arrows_.push_back({toks[1], s - 1, t - 1});
    } else if (toks[0] == "relation") {
      if (toks.size() < 3) throw ParseError("relation must list at least two arrows");
      std::vector<int> rel;
      for (size_t i = 1; i < toks.size(); ++i) {
        auto it = arrow_by_name.find(toks[i]);
        if (it == arrow_by_name.end()) throw ParseError("unknown arrow in relation: " + toks[i]);
        rel.push_back(it->second);
      }
      for (size_t i = 0; i + 1 < rel.size(); ++i)
        if (alg.arrows_[rel[i]].tgt != alg.arrows_[rel[i + 1]].src)
          throw ParseError("relation path is not composable");
      alg.relations_.push_back(std::move(rel));
    } else {
      throw ParseError("unrecognized directive: " + toks[0]);
    }
  }
  if (!saw_q || !saw_v) throw ParseError("algebra file must set q and vertices");

  alg.build_paths();
  alg.build_modules();
  return alg;
}

// Nonzero paths are walks avoiding every relation as a contiguous subword.
// We walk the subword-avoidance automaton whose state is the longest suffix
// of the current path that is a proper prefix of some relation; a reachable
// cycle in the state graph means paths of unbounded length, i.e. the algebra
// is not finite dimensional.
void Algebra::build_paths() {
  using Word = std::vector<int>;

  std::set<Word> prefixes;  // proper prefixes of relations (excluding full)
  prefixes.insert(Word{});
  for (auto& rel : relations_)
    for (size_t l = 1; l < rel.size(); ++l) prefixes.insert(Word(rel.begin(), rel.begin() + l));

  auto is_relation_suffix = [&](const Word& w) {
    for (auto& rel : relations_) {
      if (rel.size() > w.size()) continue;
      if (std::equal(rel.begin(), rel.end(), w.end() - long(rel.size()))) return true;
    }
    return false;
  };
  auto next_state = [&](const Word& state, int a) -> std::optional<Word> {
    Word w = state;
    w.push_back(a);
    if (is_relation_suffix(w)) return std::nullopt;  // path is zero
    for (size_t start = 0; start <= w.size(); ++start) {
      Word suf(w.begin() + long(start), w.end());
      if (prefixes.count(suf)) return suf;
    }
    return Word{};
  };

  // State graph reachability + cycle detection. A state is (end vertex,
  // suffix word); the end vertex is determined by the suffix except when
  // the suffix is empty.
  using State = std::pair<int, Word>;
  std::map<State, int> color;  // 0 unseen implied, 1 on stack, 2 done
  std::vector<State> stack;
  auto out_edges = [&](const State& st) {
    std::vector<State> nxt;
    for (size_t a = 0; a < arrows_.size(); ++a) {
      if (arrows_[a].src != st.first) continue;
      auto ns = next_state(st.second, int(a));
      if (ns) nxt.push_back({arrows_[a].tgt, *ns});
    }
    return nxt;
  };
  std::function<void(const State&)> dfs = [&](const State& st) {
    color[st] = 1;
    for (auto& n : out_edges(st)) {
      int c = color.count(n) ? color[n] : 0;
      if (c == 1) throw ParseError("not finite dimensional: unbounded nonzero paths");
      if (c == 0) dfs(n);
    }
    color[st] = 2;
  };
  for (int v = 0; v < nv_; ++v) dfs({v, {}});

  // Enumerate all nonzero paths; the acyclic automaton bounds their length.
  std::function<void(int, const Word&, const Word&)> walk = [&](int at, const Word& path,
                                                                const Word& state) {
    if (int(paths_.size()) > kMaxPaths) throw ParseError("algebra too large: path cap exceeded");
    int src = path.empty() ? at : arrows_[path.front()].src;
    paths_.push_back({src, at, path});
    for (size_t a = 0; a < arrows_.size(); ++a) {
      if (arrows_[a].src != at) continue;
      auto ns = next_state(state, int(a));
      if (!ns) continue;
      Word p = path;
      p.push_back(int(a));
      walk(arrows_[a].tgt, p, *ns);
    }
  };
  for (int v = 0; v < nv_; ++v) walk(v, {}, {});

  std::sort(paths_.begin(), paths_.end(), [](const Path& x, const Path& y) {
    return std::tuple(x.length(), x.arrows, x.src) < std::tuple(y.length(), y.arrows, y.src);
  });

  by_ends_.assign(nv_, std::vector<std::vector<int>>(nv_));
  for (int p = 0; p < int(paths_.size()); ++p) {
    by_ends_[paths_[p].src][paths_[p].tgt].push_back(p);
    path_lookup_[{paths_[p].src, paths_[p].arrows}] = p;
  }
}

int Algebra::path_index(int src, const std::vector<int>& arrows) const {
  auto it = path_lookup_.find({src, arrows});
  return it == path_lookup_.end() ? -1 : it->second;
}

int Algebra::proj_basis_index(int i, int path_idx) const {
  const auto& list = by_ends_[i][paths_[path_idx].tgt];
  auto it = std::find(list.begin(), list.end(), path_idx);
  return it == list.end() ? -1 : int(it - list.begin());
}

void Algebra::build_modules() {
  for (int i = 0; i < nv_; ++i) {
    Rep P;
    P.dim.resize(nv_);
    for (int j = 0; j < nv_; ++j) P.dim[j] = int(by_ends_[i][j].size());
    for (auto& ar : arrows_) {
      FqMatrix m(q_, P.dim[ar.tgt], P.dim[ar.src]);
      const auto& src_paths = by_ends_[i][ar.src];
      for (int c = 0; c < int(src_paths.size()); ++c) {
        std::vector<int> w = paths_[src_paths[c]].arrows;
        w.push_back(int(&ar - arrows_.data()));
        int pi = path_index(i, w);
        if (pi >= 0) m.set(proj_basis_index(i, pi), c, 1);
      }
      P.mat.push_back(std::move(m));
    }
    projectives_.push_back(std::move(P));

    Rep S;
    S.dim.assign(nv_, 0);
    S.dim[i] = 1;
    for (auto& ar : arrows_) S.mat.push_back(FqMatrix(q_, S.dim[ar.tgt], S.dim[ar.src]));
    simples_.push_back(std::move(S));
  }
}

}  // namespace hb
