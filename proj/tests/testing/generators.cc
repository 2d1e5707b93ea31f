// Copyright 2026 The malg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "testing/generators.h"

#include <algorithm>

#include "malg/semantics/evaluator.h"

namespace malg::testing {

namespace {

std::size_t Pick(Rng& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

class Gen {
 public:
  Gen(Rng& rng, const GenConfig& cfg) : rng_(rng), cfg_(cfg) {}

  Term RandomTerm(const std::vector<std::string>& scope) {
    std::size_t options = scope.size() + cfg_.constants.size() + (cfg_.literal_bound > 0 ? 1 : 0);
    std::size_t k = Pick(rng_, options);
    if (k < scope.size()) return Term::Var(scope[k]);
    k -= scope.size();
    if (k < cfg_.constants.size()) return Term::Constant(cfg_.constants[k]);
    return Term::Literal(static_cast<Element>(Pick(rng_, cfg_.literal_bound)));
  }

  Formula Leaf(const std::vector<std::string>& scope) {
    std::size_t k = Pick(rng_, 10);
    if (k == 0) return Formula::True();
    if (k == 1) return Formula::False();
    if (scope.empty() && cfg_.constants.empty() && cfg_.literal_bound == 0) return Formula::True();
    if (k < 5 || cfg_.relations.empty()) return Formula::Eq(RandomTerm(scope), RandomTerm(scope));
    const auto& [name, arity] = cfg_.relations[Pick(rng_, cfg_.relations.size())];
    std::vector<Term> terms;
    for (std::size_t i = 0; i < arity; ++i) terms.push_back(RandomTerm(scope));
    return Formula::Atom(name, terms);
  }

  Formula Any(int depth, int qdepth, const std::vector<std::string>& scope) {
    if (depth <= 0 || Pick(rng_, 5) == 0) return Leaf(scope);
    std::size_t k = Pick(rng_, 8);
    if (qdepth >= cfg_.max_quantifier_depth) k = k % 5;
    switch (k) {
      case 0:
        return Formula::Not(Any(depth - 1, qdepth, scope));
      case 1:
      case 2: {
        std::vector<Formula> kids;
        std::size_t n = 2 + Pick(rng_, 2);
        for (std::size_t i = 0; i < n; ++i) kids.push_back(Any(depth - 1, qdepth, scope));
        return k == 1 ? Formula::And(kids) : Formula::Or(kids);
      }
      case 3:
        return Formula::Implies(Any(depth - 1, qdepth, scope), Any(depth - 1, qdepth, scope));
      case 4:
        return Formula::Iff(Any(depth - 1, qdepth, scope), Any(depth - 1, qdepth, scope));
      default: {
        std::vector<std::string> pool = cfg_.bound_pool;
        std::shuffle(pool.begin(), pool.end(), rng_);
        std::size_t nb = 1 + Pick(rng_, std::min<std::size_t>(2, pool.size()));
        std::vector<std::string> bound(pool.begin(), pool.begin() + static_cast<long>(nb));
        std::vector<std::string> inner = scope;
        for (const auto& b : bound) {
          if (std::find(inner.begin(), inner.end(), b) == inner.end()) inner.push_back(b);
        }
        Formula body = Any(depth - 1, qdepth + 1, inner);
        VarTuple vt(bound);
        if (k == 5) return Formula::Exists(vt, body);
        if (k == 6) return Formula::Forall(vt, body);
        if (!cfg_.counting) return Formula::Exists(vt, body);
        auto mode = static_cast<CountMode>(Pick(rng_, 3));
        auto r = static_cast<std::uint32_t>(Pick(rng_, cfg_.max_count + 1));
        return Formula::Count(mode, r, vt, body);
      }
    }
  }

 private:
  Rng& rng_;
  const GenConfig& cfg_;
};

}  // namespace

Signature SignatureOf(const GenConfig& cfg) {
  Signature sig;
  for (const auto& [name, arity] : cfg.relations) sig.AddRelation(name, arity);
  for (const auto& c : cfg.constants) sig.AddConstant(c);
  return sig;
}

Formula RandomFormula(Rng& rng, const GenConfig& cfg) {
  Gen g(rng, cfg);
  return g.Any(cfg.max_depth, 0, cfg.free_vars);
}

Formula RandomQf(Rng& rng, const GenConfig& cfg, const std::vector<std::string>& vars, int depth) {
  GenConfig qf = cfg;
  qf.max_quantifier_depth = 0;
  Gen g(rng, qf);
  return g.Any(depth, 0, vars);
}

FiniteStructure RandomStructure(Rng& rng, const GenConfig& cfg, Element n, double density) {
  std::bernoulli_distribution coin(density);
  std::map<std::string, std::pair<std::size_t, std::vector<std::vector<Element>>>> rels;
  for (const auto& [name, arity] : cfg.relations) {
    auto& rel = rels[name] = {arity, {}};
    ForEachTuple(n, arity, [&](std::span<const Element> t) {
      if (coin(rng)) rel.second.emplace_back(t.begin(), t.end());
      return true;
    });
  }
  std::map<std::string, Element> consts;
  for (const auto& c : cfg.constants) consts[c] = static_cast<Element>(Pick(rng, n));
  return FiniteStructure::Build(n, rels, consts, "random-" + std::to_string(n));
}

}  // namespace malg::testing
