#include <gammaspace/fincat.hpp>

#include <algorithm>
#include <map>
#include <set>

namespace gs {

namespace {

using Word = std::vector<int>;  // generators in diagrammatic order: [f, g] is g o f

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

class RewriteSystem {
 public:
  explicit RewriteSystem(int word_cap) : cap_(word_cap) {}

  Word reduce(Word w) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& [lhs, rhs] : rules_) {
        auto it = std::search(w.begin(), w.end(), lhs.begin(), lhs.end());
        if (it == w.end()) continue;
        Word next(w.begin(), it);
        next.insert(next.end(), rhs.begin(), rhs.end());
        next.insert(next.end(), it + static_cast<std::ptrdiff_t>(lhs.size()), w.end());
        w = std::move(next);
        changed = true;
        break;
      }
    }
    return w;
  }

  // True when no rule's left side ends the word; enough for extensions of an irreducible word.
  bool suffix_irreducible(const Word& w) const {
    for (const auto& [lhs, rhs] : rules_)
      if (lhs.size() <= w.size() && std::equal(lhs.rbegin(), lhs.rend(), w.rbegin())) return false;
    return true;
  }

  void add_equation(const Word& a, const Word& b) { pending_.emplace_back(a, b); }

  // Knuth-Bendix completion; throws ResourceError past the word cap.
  void complete(const std::function<std::string(const Word&)>& show) {
    std::size_t rounds = 0;
    while (true) {
      while (!pending_.empty()) {
        auto [a, b] = pending_.back();
        pending_.pop_back();
        a = reduce(a);
        b = reduce(b);
        if (a == b) continue;
        if (shortlex_less(a, b)) std::swap(a, b);
        if (static_cast<int>(a.size()) > cap_)
          throw ResourceError("fundamental category: rewriting exceeded word cap " + std::to_string(cap_) +
                              " at " + show(a) + " = " + show(b));
        // Interreduce: rules whose left side the new rule rewrites are re-queued.
        std::vector<std::pair<Word, Word>> kept;
        rules_.emplace_back(a, b);
        for (std::size_t r = 0; r + 1 < rules_.size(); ++r) {
          const auto& [l, rr] = rules_[r];
          if (std::search(l.begin(), l.end(), a.begin(), a.end()) != l.end())
            pending_.push_back(rules_[r]);
          else
            kept.push_back(rules_[r]);
        }
        kept.emplace_back(a, b);
        rules_ = std::move(kept);
        for (auto& rule : rules_) rule.second = reduce(rule.second);
      }
      if (++rounds > 10000 || rules_.size() > 20000)
        throw ResourceError("fundamental category: completion did not terminate within limits");
      std::set<std::pair<Word, Word>> fresh;
      for (std::size_t i = 0; i < rules_.size(); ++i)
        for (std::size_t j = 0; j < rules_.size(); ++j) critical_pairs(rules_[i], rules_[j], fresh);
      for (const auto& eq : fresh) pending_.push_back(eq);
      if (pending_.empty()) return;
      // Drop pairs that are already joinable.
      std::vector<std::pair<Word, Word>> open;
      for (auto& [a, b] : pending_)
        if (reduce(a) != reduce(b)) open.emplace_back(a, b);
      pending_ = std::move(open);
      if (pending_.empty()) return;
    }
  }

 private:
  void critical_pairs(const std::pair<Word, Word>& r1, const std::pair<Word, Word>& r2,
                      std::set<std::pair<Word, Word>>& out) const {
    const Word& l1 = r1.first;
    const Word& l2 = r2.first;
    // Overlap: a suffix of l1 equals a prefix of l2.
    for (std::size_t k = 1; k < l1.size() && k < l2.size(); ++k) {
      if (!std::equal(l1.end() - static_cast<std::ptrdiff_t>(k), l1.end(), l2.begin())) continue;
      Word a = r1.second;
      a.insert(a.end(), l2.begin() + static_cast<std::ptrdiff_t>(k), l2.end());
      Word b(l1.begin(), l1.end() - static_cast<std::ptrdiff_t>(k));
      b.insert(b.end(), r2.second.begin(), r2.second.end());
      a = reduce(a);
      b = reduce(b);
      if (a != b) out.emplace(a, b);
    }
    // Containment: l2 inside l1.
    if (&r1 != &r2 && l2.size() <= l1.size()) {
      auto it = std::search(l1.begin(), l1.end(), l2.begin(), l2.end());
      if (it != l1.end()) {
        Word b(l1.begin(), it);
        b.insert(b.end(), r2.second.begin(), r2.second.end());
        b.insert(b.end(), it + static_cast<std::ptrdiff_t>(l2.size()), l1.end());
        Word a = reduce(r1.second);
        b = reduce(b);
        if (a != b) out.emplace(a, b);
      }
    }
  }

  int cap_;
  std::vector<std::pair<Word, Word>> rules_;
  std::vector<std::pair<Word, Word>> pending_;
};

}  // namespace

Tau1 tau1(const SimpSet& x, int word_cap) {
  const int bound = x.dim_bound();
  const int nv = x.cell_count(0);
  const int ne = bound >= 1 ? x.cell_count(1) : 0;
  std::vector<int> gen_src(ne), gen_dst(ne);
  for (int e = 0; e < ne; ++e) {
    gen_src[e] = x.vertex(1, x.table_id(1, e), 0);
    gen_dst[e] = x.vertex(1, x.table_id(1, e), 1);
  }
  auto word_of_edge = [&](int t) -> Word {
    const int c = x.cell_of(1, t);
    return c >= 0 ? Word{c} : Word{};
  };
  auto show = [&](const Word& w) {
    std::string s = "[";
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + x.cell(1, w[i]).id;
    return s + "]";
  };
  RewriteSystem rs(word_cap);
  if (bound >= 2) {
    for (int c = 0; c < x.cell_count(2); ++c) {
      const int t = x.table_id(2, c);
      Word lhs = word_of_edge(x.face(2, t, 2));
      const Word second = word_of_edge(x.face(2, t, 0));
      lhs.insert(lhs.end(), second.begin(), second.end());
      rs.add_equation(lhs, word_of_edge(x.face(2, t, 1)));
    }
  }
  rs.complete(show);

  // Normal forms: irreducible typed paths from each object.
  struct Path {
    int src, dst;
    Word word;
  };
  std::vector<Path> forms;
  std::vector<std::vector<int>> out_gens(nv);
  for (int e = 0; e < ne; ++e) out_gens[gen_src[e]].push_back(e);
  for (int v = 0; v < nv; ++v) {
    std::vector<Path> stack{{v, v, {}}};
    while (!stack.empty()) {
      Path p = std::move(stack.back());
      stack.pop_back();
      forms.push_back(p);
      for (int e : out_gens[p.dst]) {
        Word w = p.word;
        w.push_back(e);
        if (!rs.suffix_irreducible(w)) continue;
        if (static_cast<int>(w.size()) > word_cap)
          throw ResourceError("fundamental category: normal forms exceed word cap " + std::to_string(word_cap) +
                              " (infinite hom-set?) at " + show(w));
        stack.push_back(Path{p.src, gen_dst[e], std::move(w)});
      }
    }
  }
  std::sort(forms.begin(), forms.end(), [](const Path& a, const Path& b) {
    if (a.src != b.src) return a.src < b.src;
    if (a.word.empty() != b.word.empty()) return a.word.empty();
    if (!shortlex_less(a.word, b.word) && !shortlex_less(b.word, a.word)) return a.dst < b.dst;
    return shortlex_less(a.word, b.word);
  });
  std::map<std::pair<int, Word>, int> index;  // (src, word) -> arrow
  std::vector<std::string> objs;
  for (int v = 0; v < nv; ++v) objs.push_back(x.cell(0, v).id);
  std::vector<FinCat::Arrow> arrows;
  std::vector<int> ids(nv, -1);
  for (const Path& p : forms) {
    const int a = static_cast<int>(arrows.size());
    index.emplace(std::make_pair(p.src, p.word), a);
    std::string id;
    if (p.word.empty()) {
      id = "id:" + objs[p.src];
      ids[p.src] = a;
    } else {
      for (std::size_t i = 0; i < p.word.size(); ++i) id += (i ? "." : "") + x.cell(1, p.word[i]).id;
    }
    arrows.push_back({id, p.src, p.dst});
  }
  const std::size_t na = arrows.size();
  std::vector<int> table(na * na, -1);
  for (std::size_t g = 0; g < na; ++g)
    for (std::size_t f = 0; f < na; ++f) {
      if (arrows[f].dst != arrows[g].src) continue;
      Word w = forms[f].word;
      w.insert(w.end(), forms[g].word.begin(), forms[g].word.end());
      table[g * na + f] = index.at({arrows[f].src, rs.reduce(w)});
    }
  Tau1 out{FinCat(std::move(objs), std::move(arrows), std::move(ids), std::move(table)), {}};
  if (bound >= 1) {
    for (int t = 0; t < x.size(1); ++t)
      out.arrow_of_edge.push_back(index.at({x.vertex(1, t, 0), rs.reduce(word_of_edge(t))}));
  }
  return out;
}

}  // namespace gs
