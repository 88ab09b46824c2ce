#include "reglang/dfa.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <unordered_map>

#include "reglang/error.hpp"

namespace reglang {

Dfa::Dfa(Alphabet alphabet, std::size_t state_count, State initial, std::vector<State> delta,
         std::vector<bool> accepting)
    : alphabet_(std::move(alphabet)),
      initial_(initial),
      delta_(std::move(delta)),
      accepting_(std::move(accepting)) {
  if (alphabet_.empty()) throw Error("automaton alphabet must not be empty");
  if (state_count == 0) throw Error("automaton needs at least one state");
  if (initial_ >= state_count) throw Error("initial state out of range");
  if (accepting_.size() != state_count) throw Error("accepting set size mismatch");
  if (delta_.size() != state_count * alphabet_.size())
    throw Error("transition table is not total");
  for (State t : delta_)
    if (t >= state_count) throw Error("transition targets a missing state");
}

bool Dfa::accepts(std::string_view word) const {
  State q = initial_;
  for (char c : word) {
    auto index = alphabet_.index_of(c);
    if (!index) return false;
    q = next(q, *index);
  }
  return accepting_[q];
}

Dfa determinize(const Nfa& nfa, std::size_t max_states) {
  using Subset = std::vector<Nfa::State>;
  const std::size_t k = nfa.alphabet.size();
  std::map<Subset, Dfa::State> ids;
  std::vector<Subset> subsets;
  std::vector<Dfa::State> delta;
  std::vector<bool> accepting;

  auto intern = [&](Subset s) -> Dfa::State {
    auto it = ids.find(s);
    if (it != ids.end()) return it->second;
    if (subsets.size() >= max_states)
      throw LimitError("subset construction exceeds " + std::to_string(max_states) + " states");
    auto id = static_cast<Dfa::State>(subsets.size());
    accepting.push_back(std::binary_search(s.begin(), s.end(), nfa.accept));
    ids.emplace(s, id);
    subsets.push_back(std::move(s));
    return id;
  };

  intern(nfa.closure({nfa.start}));
  for (std::size_t current = 0; current < subsets.size(); ++current) {
    for (std::size_t a = 0; a < k; ++a) {
      Subset moved;
      for (auto s : subsets[current])
        for (const auto& e : nfa.edges[s])
          if (e.symbol == a) moved.push_back(e.target);
      std::sort(moved.begin(), moved.end());
      moved.erase(std::unique(moved.begin(), moved.end()), moved.end());
      Dfa::State target = intern(nfa.closure(std::move(moved)));
      delta.push_back(target);
    }
  }
  return Dfa(nfa.alphabet, subsets.size(), 0, std::move(delta), std::move(accepting));
}

namespace {

// Numbers states breadth-first from the initial state; unreachable states
// are dropped.
Dfa renumber_breadth_first(const Dfa& dfa) {
  const std::size_t k = dfa.alphabet().size();
  constexpr auto kUnset = static_cast<Dfa::State>(-1);
  std::vector<Dfa::State> id(dfa.state_count(), kUnset);
  std::vector<Dfa::State> order;
  id[dfa.initial()] = 0;
  order.push_back(dfa.initial());
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t a = 0; a < k; ++a) {
      Dfa::State t = dfa.next(order[i], a);
      if (id[t] == kUnset) {
        id[t] = static_cast<Dfa::State>(order.size());
        order.push_back(t);
      }
    }
  }
  std::vector<Dfa::State> delta;
  std::vector<bool> accepting;
  delta.reserve(order.size() * k);
  for (Dfa::State q : order) {
    accepting.push_back(dfa.is_accepting(q));
    for (std::size_t a = 0; a < k; ++a) delta.push_back(id[dfa.next(q, a)]);
  }
  return Dfa(dfa.alphabet(), order.size(), 0, std::move(delta), std::move(accepting));
}

class Hopcroft {
 public:
  explicit Hopcroft(const Dfa& dfa) : dfa_(dfa), n_(dfa.state_count()), k_(dfa.alphabet().size()) {
    build_inverse();
  }

  std::vector<std::size_t> refine() {
    block_of_.assign(n_, 0);
    std::vector<Dfa::State> accepting;
    std::vector<Dfa::State> rejecting;
    for (Dfa::State q = 0; q < n_; ++q) (dfa_.is_accepting(q) ? accepting : rejecting).push_back(q);
    if (!accepting.empty()) add_block(std::move(accepting));
    if (!rejecting.empty()) add_block(std::move(rejecting));
    if (blocks_.size() == 2) {
      std::size_t smaller = blocks_[0].size() <= blocks_[1].size() ? 0 : 1;
      for (std::size_t a = 0; a < k_; ++a) push(smaller, a);
    }

    std::vector<std::size_t> touched;
    std::vector<std::vector<Dfa::State>> marked(blocks_.size());
    while (!work_.empty()) {
      auto [splitter, a] = work_.back();
      work_.pop_back();
      in_work_[splitter * k_ + a] = false;

      touched.clear();
      for (Dfa::State t : blocks_[splitter]) {
        for (std::size_t i = inv_offset_[a][t]; i < inv_offset_[a][t + 1]; ++i) {
          Dfa::State s = inv_sources_[a][i];
          std::size_t b = block_of_[s];
          if (b >= marked.size()) marked.resize(blocks_.size());
          if (marked[b].empty()) touched.push_back(b);
          marked[b].push_back(s);
        }
      }
      for (std::size_t b : touched) {
        std::vector<Dfa::State> hit = std::move(marked[b]);
        marked[b].clear();
        std::sort(hit.begin(), hit.end());
        hit.erase(std::unique(hit.begin(), hit.end()), hit.end());
        if (hit.size() == blocks_[b].size()) continue;
        split(b, hit);
        marked.resize(blocks_.size());
      }
    }
    return block_of_;
  }

  std::size_t block_count() const noexcept { return blocks_.size(); }

 private:
  void build_inverse() {
    inv_offset_.assign(k_, std::vector<std::size_t>(n_ + 1, 0));
    inv_sources_.assign(k_, std::vector<Dfa::State>(n_));
    for (std::size_t a = 0; a < k_; ++a) {
      auto& offset = inv_offset_[a];
      for (Dfa::State q = 0; q < n_; ++q) ++offset[dfa_.next(q, a) + 1];
      for (std::size_t i = 1; i <= n_; ++i) offset[i] += offset[i - 1];
      std::vector<std::size_t> fill(offset.begin(), offset.end() - 1);
      for (Dfa::State q = 0; q < n_; ++q) inv_sources_[a][fill[dfa_.next(q, a)]++] = q;
    }
  }

  std::size_t add_block(std::vector<Dfa::State> members) {
    std::size_t id = blocks_.size();
    for (Dfa::State q : members) block_of_[q] = id;
    blocks_.push_back(std::move(members));
    in_work_.resize(blocks_.size() * k_, false);
    return id;
  }

  void push(std::size_t block, std::size_t a) {
    if (in_work_[block * k_ + a]) return;
    in_work_[block * k_ + a] = true;
    work_.emplace_back(block, a);
  }

  // `hit` is a proper, sorted, non-empty subset of block b.
  void split(std::size_t b, const std::vector<Dfa::State>& hit) {
    std::vector<Dfa::State> rest;
    for (Dfa::State q : blocks_[b])
      if (!std::binary_search(hit.begin(), hit.end(), q)) rest.push_back(q);
    blocks_[b] = std::move(rest);
    std::size_t fresh = add_block(hit);
    for (std::size_t a = 0; a < k_; ++a) {
      if (in_work_[b * k_ + a]) {
        push(fresh, a);
      } else {
        push(blocks_[fresh].size() <= blocks_[b].size() ? fresh : b, a);
      }
    }
  }

  const Dfa& dfa_;
  std::size_t n_;
  std::size_t k_;
  std::vector<std::vector<std::size_t>> inv_offset_;
  std::vector<std::vector<Dfa::State>> inv_sources_;
  std::vector<std::size_t> block_of_;
  std::vector<std::vector<Dfa::State>> blocks_;
  std::vector<std::pair<std::size_t, std::size_t>> work_;
  std::vector<bool> in_work_;
};

bool accepts_combined(bool a, bool b, SetOp op) {
  switch (op) {
    case SetOp::Intersect: return a && b;
    case SetOp::Union: return a || b;
    case SetOp::SymDiff: return a != b;
    case SetOp::Minus: return a && !b;
  }
  return false;
}

}  // namespace

Dfa minimize(const Dfa& dfa) {
  Dfa reachable = renumber_breadth_first(dfa);
  Hopcroft hopcroft(reachable);
  std::vector<std::size_t> block_of = hopcroft.refine();
  const std::size_t k = reachable.alphabet().size();
  const std::size_t blocks = hopcroft.block_count();
  std::vector<Dfa::State> delta(blocks * k);
  std::vector<bool> accepting(blocks, false);
  for (Dfa::State q = 0; q < reachable.state_count(); ++q) {
    std::size_t b = block_of[q];
    accepting[b] = reachable.is_accepting(q);
    for (std::size_t a = 0; a < k; ++a)
      delta[b * k + a] = static_cast<Dfa::State>(block_of[reachable.next(q, a)]);
  }
  Dfa quotient(reachable.alphabet(), blocks, static_cast<Dfa::State>(block_of[reachable.initial()]),
               std::move(delta), std::move(accepting));
  return renumber_breadth_first(quotient);
}

Dfa dfa_from_regex(std::string_view text, const Alphabet& alphabet, std::size_t max_states) {
  RegexAst ast = parse_regex(text, alphabet);
  return minimize(determinize(compile_to_nfa(ast, alphabet), max_states));
}

Dfa extend_alphabet(const Dfa& dfa, const Alphabet& superset) {
  if (!superset.includes(dfa.alphabet()))
    throw AlphabetError("alphabet {" + superset.symbols() + "} does not include {" +
                        dfa.alphabet().symbols() + "}");
  if (superset == dfa.alphabet()) return dfa;
  const std::size_t n = dfa.state_count();
  const auto trash = static_cast<Dfa::State>(n);
  const std::size_t k = superset.size();
  std::vector<Dfa::State> delta;
  delta.reserve((n + 1) * k);
  for (Dfa::State q = 0; q <= n; ++q) {
    for (std::size_t a = 0; a < k; ++a) {
      auto old = dfa.alphabet().index_of(superset[a]);
      delta.push_back(q < n && old ? dfa.next(q, *old) : trash);
    }
  }
  std::vector<bool> accepting = dfa.accepting();
  accepting.push_back(false);
  return Dfa(superset, n + 1, dfa.initial(), std::move(delta), std::move(accepting));
}

std::pair<Dfa, Dfa> harmonize(const Dfa& d1, const Dfa& d2) {
  if (d1.alphabet() == d2.alphabet()) return {d1, d2};
  Alphabet common = d1.alphabet().united(d2.alphabet());
  return {extend_alphabet(d1, common), extend_alphabet(d2, common)};
}

Dfa combine(const Dfa& d1, const Dfa& d2, SetOp op, std::size_t max_states) {
  if (!(d1.alphabet() == d2.alphabet()))
    throw AlphabetError("cannot combine automata over {" + d1.alphabet().symbols() + "} and {" +
                        d2.alphabet().symbols() + "}; harmonize first");
  const std::size_t k = d1.alphabet().size();
  const std::uint64_t width = d2.state_count();
  std::unordered_map<std::uint64_t, Dfa::State> ids;
  std::vector<std::pair<Dfa::State, Dfa::State>> pairs;
  std::vector<Dfa::State> delta;
  std::vector<bool> accepting;

  auto intern = [&](Dfa::State p, Dfa::State q) -> Dfa::State {
    const std::uint64_t key = p * width + q;
    auto it = ids.find(key);
    if (it != ids.end()) return it->second;
    if (pairs.size() >= max_states)
      throw LimitError("product automaton exceeds " + std::to_string(max_states) + " states");
    auto id = static_cast<Dfa::State>(pairs.size());
    ids.emplace(key, id);
    pairs.emplace_back(p, q);
    accepting.push_back(accepts_combined(d1.is_accepting(p), d2.is_accepting(q), op));
    return id;
  };

  intern(d1.initial(), d2.initial());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (std::size_t a = 0; a < k; ++a) {
      auto [p, q] = pairs[i];
      delta.push_back(intern(d1.next(p, a), d2.next(q, a)));
    }
  }
  return Dfa(d1.alphabet(), pairs.size(), 0, std::move(delta), std::move(accepting));
}

Dfa complement(const Dfa& dfa) {
  std::vector<bool> flipped = dfa.accepting();
  flipped.flip();
  return Dfa(dfa.alphabet(), dfa.state_count(), dfa.initial(), dfa.table(), std::move(flipped));
}

nlohmann::json to_json(const Dfa& dfa) {
  nlohmann::json alphabet = nlohmann::json::array();
  for (char c : dfa.alphabet().symbols()) alphabet.push_back(std::string(1, c));
  nlohmann::json accepting = nlohmann::json::array();
  nlohmann::json delta = nlohmann::json::array();
  const std::size_t k = dfa.alphabet().size();
  for (Dfa::State q = 0; q < dfa.state_count(); ++q) {
    if (dfa.is_accepting(q)) accepting.push_back(q);
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t a = 0; a < k; ++a) row.push_back(dfa.next(q, a));
    delta.push_back(std::move(row));
  }
  return {{"alphabet", std::move(alphabet)},
          {"states", dfa.state_count()},
          {"initial", dfa.initial()},
          {"accepting", std::move(accepting)},
          {"delta", std::move(delta)}};
}

Dfa dfa_from_json(const nlohmann::json& j) {
  std::string symbols;
  for (const auto& s : j.at("alphabet")) {
    const auto& text = s.get_ref<const std::string&>();
    if (text.size() != 1) throw Error("alphabet entries must be single characters");
    symbols += text;
  }
  Alphabet alphabet(symbols);
  if (alphabet.size() != symbols.size()) throw Error("duplicate alphabet entries");
  const auto n = j.at("states").get<std::size_t>();
  std::vector<bool> accepting(n, false);
  for (const auto& q : j.at("accepting")) {
    auto index = q.get<std::size_t>();
    if (index >= n) throw Error("accepting state out of range");
    accepting[index] = true;
  }
  // delta columns follow the listed alphabet order, which may differ from
  // the sorted order used internally.
  std::vector<Dfa::State> delta(n * alphabet.size());
  const auto& rows = j.at("delta");
  if (rows.size() != n) throw Error("transition table is not total");
  for (std::size_t q = 0; q < n; ++q) {
    if (rows[q].size() != symbols.size()) throw Error("transition table is not total");
    for (std::size_t a = 0; a < symbols.size(); ++a)
      delta[q * alphabet.size() + *alphabet.index_of(symbols[a])] = rows[q][a].get<Dfa::State>();
  }
  return Dfa(std::move(alphabet), n, j.at("initial").get<Dfa::State>(), std::move(delta),
             std::move(accepting));
}

}  // namespace reglang
