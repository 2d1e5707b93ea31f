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

#include "malg/rewrite/rank1.h"

#include <algorithm>
#include <map>
#include <set>

#include "element_names.h"
#include "malg/algebraicity/ma_bound.h"
#include "malg/error.h"
#include "malg/syntax/printer.h"
#include "malg/syntax/transform.h"

namespace malg {

namespace {

void CheckRelation(const Formula& r_formula, const VarTuple& z, const std::string& x) {
  if (!r_formula.quantifier_free()) {
    throw Error(ErrorCode::kShape, "R must be quantifier-free: " + Print(r_formula));
  }
  if (z.empty() || z.contains(x)) {
    throw Error(ErrorCode::kShape, "count tuple must be nonempty and avoid '" + x + "'");
  }
  for (const auto& v : r_formula.free_vars()) {
    if (v != x && !z.contains(v)) {
      throw Error(ErrorCode::kShape, "free variable '" + v + "' of R outside " + ToString(z) +
                                         " and '" + x + "'");
    }
  }
}

FreshNames NamesAvoiding(const Rank1Config& cfg, const Formula& r_formula, const VarTuple& z,
                         std::initializer_list<std::string> extra) {
  FreshNames fresh;
  fresh.Reserve(r_formula);
  for (const auto& v : z) fresh.Reserve(v);
  for (const auto& v : extra) fresh.Reserve(v);
  for (const auto& k : cfg.kernels) {
    fresh.Reserve(k.formula);
    for (const auto& v : k.vars) fresh.Reserve(v);
  }
  return fresh;
}

// theta with slot i renamed to fixed[i] where given, the rest to fresh
// names appended to `others`.
Formula PlaceKernel(const Rank1Kernel& k, const std::map<std::size_t, std::string>& fixed,
                    FreshNames& fresh, std::vector<std::string>& others) {
  std::map<std::string, std::string> ren;
  for (std::size_t i = 0; i < k.vars.size(); ++i) {
    auto it = fixed.find(i);
    if (it != fixed.end()) {
      ren[k.vars[i]] = it->second;
    } else {
      std::string v = fresh.Fresh(k.vars[i]);
      ren[k.vars[i]] = v;
      others.push_back(v);
    }
  }
  return RenameFree(k.formula, ren);
}

Formula MembershipWith(const Rank1Config& cfg, const Formula& r_formula, const VarTuple& z,
                       const std::string& x, std::uint32_t r, const std::string& w,
                       const std::string& y, FreshNames& fresh) {
  std::vector<Formula> ways;
  for (const auto& k : cfg.kernels) {
    for (std::size_t p = 1; p < k.vars.size(); ++p) {
      std::vector<std::string> others;
      Formula body = PlaceKernel(k, {{0, y}, {p, w}}, fresh, others);
      ways.push_back(Formula::Exists(VarTuple(others), body));
    }
  }
  if (ways.empty()) return Formula::False();
  VarTuple zc = fresh.FreshCopy(z);
  std::map<std::string, std::string> ren{{x, w}};
  for (std::size_t i = 0; i < z.size(); ++i) ren[z[i]] = zc[i];
  Formula many = Formula::Count(CountMode::kAtLeast, r + 1, zc, RenameFree(r_formula, ren));
  return Formula::And({Formula::Or(ways), many});
}

}  // namespace

void ValidateRank1Config(const Rank1Config& cfg) {
  if (cfg.n_theta.size() != cfg.kernels.size()) {
    throw Error(ErrorCode::kInvalidConfig, "one N_theta per kernel is required");
  }
  std::uint64_t cap = 0;
  for (std::size_t i = 0; i < cfg.kernels.size(); ++i) {
    const Rank1Kernel& k = cfg.kernels[i];
    if (k.vars.size() < 2) {
      throw Error(ErrorCode::kInvalidConfig, "kernel needs x and y slots: " + Print(k.formula));
    }
    if (!k.formula.quantifier_free()) {
      throw Error(ErrorCode::kInvalidConfig, "kernel must be quantifier-free: " + Print(k.formula));
    }
    for (const auto& v : k.formula.free_vars()) {
      if (!k.vars.contains(v)) {
        throw Error(ErrorCode::kInvalidConfig,
                    "kernel variable '" + v + "' missing from " + ToString(k.vars));
      }
    }
    if (!k.formula.has_free(k.vars[0]) || !k.formula.has_free(k.vars[1])) {
      throw Error(ErrorCode::kInvalidConfig, "kernel must mention its x and y slots: " +
                                                 Print(k.formula));
    }
    cap += cfg.n_theta[i] * (k.vars.size() - 1);
  }
  for (const Term& t : cfg.q) {
    if (t.is_variable()) throw Error(ErrorCode::kInvalidConfig, "Q must name elements");
  }
  if (cfg.ell_star > cap) {
    throw Error(ErrorCode::kInvalidConfig, "l* = " + std::to_string(cfg.ell_star) +
                                               " exceeds its cap " + std::to_string(cap));
  }
}

Formula FrMembership(const Rank1Config& cfg, const Formula& r_formula, const VarTuple& z,
                     const std::string& x, std::uint32_t r, const std::string& w,
                     const std::string& y) {
  CheckRelation(r_formula, z, x);
  FreshNames fresh = NamesAvoiding(cfg, r_formula, z, {x, w, y});
  return MembershipWith(cfg, r_formula, z, x, r, w, y, fresh);
}

RewriteResult Rank1Delta(const Rank1Config& cfg, const Formula& r_formula, const VarTuple& z,
                         const std::string& x, std::uint32_t r) {
  ValidateRank1Config(cfg);
  CheckRelation(r_formula, z, x);
  FreshNames fresh = NamesAvoiding(cfg, r_formula, z, {x});
  std::vector<Formula> disjuncts;
  std::vector<TraceStep> trace;
  for (const auto& k : cfg.kernels) {
    std::string y = fresh.Fresh("y");
    std::vector<std::string> tail;
    std::vector<Formula> conj{PlaceKernel(k, {{0, x}, {1, y}}, fresh, tail)};
    for (const Term& q : cfg.q) conj.push_back(Formula::Not(Formula::Eq(Term::Var(y), q)));
    if (cfg.ell_star > 0) {
      std::vector<std::string> ws;
      for (std::uint32_t i = 0; i < cfg.ell_star; ++i) ws.push_back(fresh.Fresh("w"));
      std::vector<Formula> block;
      for (std::size_t i = 0; i < ws.size(); ++i) {
        for (std::size_t j = i + 1; j < ws.size(); ++j) {
          block.push_back(Formula::Not(Formula::VarEq(ws[i], ws[j])));
        }
      }
      for (const auto& w : ws) {
        block.push_back(MembershipWith(cfg, r_formula, z, x, r, w, y, fresh));
        block.push_back(Formula::Not(Formula::VarEq(x, w)));
      }
      conj.push_back(Formula::Exists(VarTuple(ws), Formula::And(block)));
    }
    std::vector<std::string> bound{y};
    bound.insert(bound.end(), tail.begin(), tail.end());
    disjuncts.push_back(Formula::Exists(VarTuple(bound), Formula::And(conj)));
    trace.push_back({"rank1-disjunct", disjuncts.back()});
  }
  Formula delta = ExpandCounting(Formula::Or(disjuncts));
  trace.push_back({"rank1-delta", delta});
  // The configuration's kernels and R are taken as certified.
  MaEvidence ev;
  for (const auto& k : cfg.kernels) ev.Add(k.formula);
  ev.Add(r_formula);
  return Finish(delta, std::move(ev), cfg.threshold, std::move(trace));
}

Rank1Config EstimateRank1Config(const Family& family, const std::vector<Rank1Kernel>& kernels,
                                const Formula& r_formula, const VarTuple& z, const std::string& x,
                                std::uint32_t r, std::size_t suffix) {
  CheckRelation(r_formula, z, x);
  if (suffix == 0 || family.size() < suffix) {
    throw Error(ErrorCode::kNotStable, "family has fewer than " + std::to_string(suffix) +
                                           " cutouts");
  }
  Rank1Config cfg{.kernels = kernels};
  for (const auto& k : kernels) {
    if (k.vars.size() < 2) {
      throw Error(ErrorCode::kInvalidConfig, "kernel needs x and y slots: " + Print(k.formula));
    }
    std::vector<std::string> tail(k.vars.begin() + 1, k.vars.end());
    cfg.n_theta.push_back(MaxSolutionCount(family, k.formula, VarTuple(tail)) + 1);
  }
  FreshNames fresh = NamesAvoiding(cfg, r_formula, z, {x});
  std::string w = fresh.Fresh("w"), y = fresh.Fresh("y");
  Formula member = MembershipWith(cfg, r_formula, z, x, r, w, y, fresh);

  // sizes[i][b] = |F_r(b)| on cutout i.
  std::vector<std::vector<std::uint32_t>> sizes;
  for (const auto& m : family) {
    std::vector<std::uint32_t> v(m.size(), 0);
    for (const auto& t : Solutions(m, member, VarTuple{y, w}).tuples) ++v[t[0]];
    sizes.push_back(std::move(v));
  }
  const std::size_t first = family.size() - suffix;
  auto multiplicity = [&](std::size_t i, std::uint32_t value) {
    return std::count(sizes[i].begin(), sizes[i].end(), value);
  };
  std::set<std::uint32_t> values;
  for (std::size_t i = first; i < family.size(); ++i) values.insert(sizes[i].begin(), sizes[i].end());
  bool found = false;
  for (std::uint32_t value : values) {
    bool increasing = true;
    for (std::size_t i = first + 1; i < family.size(); ++i) {
      increasing = increasing && multiplicity(i, value) > multiplicity(i - 1, value);
    }
    if (increasing) {
      cfg.ell_star = value;
      found = true;
    }
  }
  if (!found) throw Error(ErrorCode::kNotStable, "no |F_r(b)| value grows along the family");

  auto above = [&](std::size_t i) {
    std::vector<Element> out;
    for (Element b = 0; b < sizes[i].size(); ++b) {
      if (sizes[i][b] > cfg.ell_star) out.push_back(b);
    }
    return out;
  };
  std::vector<Element> q = above(family.size() - 1);
  for (std::size_t i = first; i < family.size(); ++i) {
    if (above(i).size() != q.size()) {
      throw Error(ErrorCode::kNotStable, "exceptional set does not settle along the family");
    }
  }
  for (Element e : q) cfg.q.push_back(internal::NameElement(family, first, e));

  // Smallest cutout from which the elements above l* are exactly Q.
  std::size_t start = family.size() - 1;
  while (start > 0 && above(start - 1) == q) --start;
  cfg.threshold = family[start].size();
  ValidateRank1Config(cfg);
  return cfg;
}

}  // namespace malg
