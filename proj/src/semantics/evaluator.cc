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

#include "malg/semantics/evaluator.h"

#include <algorithm>
#include <map>

#include "malg/error.h"

namespace malg {

namespace {

constexpr std::uint64_t kMemoLimit = 65536;

struct Arg {
  bool is_slot;
  std::uint32_t value;  // slot index or element
};

enum class Op : std::uint8_t {
  kTrue,
  kFalse,
  kAtom,
  kEq,
  kNot,
  kAnd,
  kOr,
  kImplies,
  kIff,
  kExists,  // conjuncts of the body
  kForall,  // conjuncts of the negated body; result is inverted
  kCount,
};

struct Node {
  Op op;
  std::vector<int> kids;
  const Relation* rel = nullptr;
  std::vector<Arg> args;

  std::vector<std::uint32_t> block;
  std::vector<int> pre;
  std::vector<std::vector<int>> after;
  CountMode mode = CountMode::kAtLeast;
  std::uint32_t r = 0;

  std::vector<std::uint32_t> free_slots;  // sorted
  bool has_quantifier = false;
  std::vector<std::uint32_t> memo_slots;
  std::vector<std::int8_t> memo;
};

void MergeSorted(std::vector<std::uint32_t>& into, const std::vector<std::uint32_t>& from) {
  std::vector<std::uint32_t> out;
  std::set_union(into.begin(), into.end(), from.begin(), from.end(), std::back_inserter(out));
  into = std::move(out);
}

}  // namespace

struct Evaluator::Impl {
  const FiniteStructure* m;
  VarTuple inputs;
  std::vector<Node> nodes;
  std::vector<Element> env;
  std::map<std::string, std::vector<std::uint32_t>> scope;
  std::uint32_t slot_count = 0;
  int root = -1;

  // ---- compilation

  std::uint32_t PushVar(const std::string& v) {
    std::uint32_t s = slot_count++;
    scope[v].push_back(s);
    return s;
  }
  void PopVar(const std::string& v) {
    auto it = scope.find(v);
    it->second.pop_back();
    if (it->second.empty()) scope.erase(it);
  }

  int Add(Node n) {
    nodes.push_back(std::move(n));
    return static_cast<int>(nodes.size()) - 1;
  }

  int Leaf(Op op) { return Add(Node{.op = op}); }

  int Composite(Op op, std::vector<int> kids) {
    Node n{.op = op};
    for (int k : kids) {
      MergeSorted(n.free_slots, nodes[k].free_slots);
      n.has_quantifier = n.has_quantifier || nodes[k].has_quantifier;
    }
    n.kids = std::move(kids);
    return Add(std::move(n));
  }

  Arg CompileTerm(const Term& t) {
    switch (t.kind()) {
      case TermKind::kVariable: {
        auto it = scope.find(t.name());
        if (it == scope.end()) {
          throw Error(ErrorCode::kUnboundVariable, "variable '" + t.name() + "' is not assigned");
        }
        return {true, it->second.back()};
      }
      case TermKind::kElement:
        if (t.element() >= m->size()) {
          throw Error(ErrorCode::kInvalidArgument,
                      "element #" + std::to_string(t.element()) + " outside universe of size " +
                          std::to_string(m->size()));
        }
        return {false, t.element()};
      case TermKind::kConstant: {
        auto it = m->constants().find(t.name());
        if (it == m->constants().end()) {
          throw Error(ErrorCode::kUnknownSymbol, "unknown constant '" + t.name() + "'");
        }
        return {false, it->second};
      }
    }
    return {false, 0};
  }

  static void NoteSlots(Node& n) {
    for (const Arg& a : n.args) {
      if (a.is_slot) n.free_slots.push_back(a.value);
    }
    std::sort(n.free_slots.begin(), n.free_slots.end());
    n.free_slots.erase(std::unique(n.free_slots.begin(), n.free_slots.end()), n.free_slots.end());
  }

  int Compile(const Formula& f) {
    switch (f.kind()) {
      case FormulaKind::kTrue:
        return Leaf(Op::kTrue);
      case FormulaKind::kFalse:
        return Leaf(Op::kFalse);
      case FormulaKind::kAtom: {
        const Relation* rel = m->relation(f.relation());
        if (rel == nullptr) {
          throw Error(ErrorCode::kUnknownSymbol, "unknown relation '" + f.relation() + "'");
        }
        if (rel->arity() != f.terms().size()) {
          throw Error(ErrorCode::kArityMismatch,
                      "relation '" + f.relation() + "' has arity " +
                          std::to_string(rel->arity()) + ", got " +
                          std::to_string(f.terms().size()) + " arguments");
        }
        Node n{.op = Op::kAtom, .rel = rel};
        for (const Term& t : f.terms()) n.args.push_back(CompileTerm(t));
        NoteSlots(n);
        return Add(std::move(n));
      }
      case FormulaKind::kEq: {
        Node n{.op = Op::kEq};
        for (const Term& t : f.terms()) n.args.push_back(CompileTerm(t));
        NoteSlots(n);
        return Add(std::move(n));
      }
      case FormulaKind::kNot:
        return Composite(Op::kNot, {Compile(f.body())});
      case FormulaKind::kAnd:
      case FormulaKind::kOr:
      case FormulaKind::kImplies:
      case FormulaKind::kIff: {
        std::vector<int> kids;
        for (const Formula& c : f.children()) kids.push_back(Compile(c));
        Op op = f.kind() == FormulaKind::kAnd       ? Op::kAnd
                : f.kind() == FormulaKind::kOr      ? Op::kOr
                : f.kind() == FormulaKind::kImplies ? Op::kImplies
                                                    : Op::kIff;
        return Composite(op, std::move(kids));
      }
      case FormulaKind::kExists:
      case FormulaKind::kForall:
      case FormulaKind::kCount:
        return CompileQuantifier(f);
    }
    throw Error(ErrorCode::kUnsupported, "unknown formula kind");
  }

  // Conjunct list equivalent to f.
  void Conj(const Formula& f, std::vector<int>& out) {
    switch (f.kind()) {
      case FormulaKind::kTrue:
        return;
      case FormulaKind::kAnd:
        for (const Formula& c : f.children()) Conj(c, out);
        return;
      case FormulaKind::kNot:
        NegConj(f.body(), out);
        return;
      default:
        out.push_back(Compile(f));
    }
  }

  // Conjunct list equivalent to !f.
  void NegConj(const Formula& f, std::vector<int>& out) {
    switch (f.kind()) {
      case FormulaKind::kFalse:
        return;
      case FormulaKind::kTrue:
        out.push_back(Leaf(Op::kFalse));
        return;
      case FormulaKind::kOr:
        for (const Formula& c : f.children()) NegConj(c, out);
        return;
      case FormulaKind::kImplies:
        Conj(f.child(0), out);
        NegConj(f.child(1), out);
        return;
      case FormulaKind::kNot:
        Conj(f.body(), out);
        return;
      default:
        out.push_back(Composite(Op::kNot, {Compile(f)}));
    }
  }

  int CompileQuantifier(const Formula& f) {
    Node n;
    std::vector<std::string> names;
    Formula body = f;
    if (f.kind() == FormulaKind::kExists) {
      n.op = Op::kExists;
      // Merge directly nested existential blocks.
      while (body.kind() == FormulaKind::kExists) {
        bool clash = false;
        for (const auto& v : body.bound()) {
          if (std::find(names.begin(), names.end(), v) != names.end()) clash = true;
        }
        if (clash) break;
        for (const auto& v : body.bound()) names.push_back(v);
        body = body.body();
      }
    } else {
      n.op = f.kind() == FormulaKind::kForall ? Op::kForall : Op::kCount;
      n.mode = f.count_mode();
      n.r = f.kind() == FormulaKind::kCount ? f.count() : 0;
      names = f.bound().names();
      body = f.body();
    }
    std::vector<std::uint32_t> slots;
    for (const auto& v : names) slots.push_back(PushVar(v));
    std::vector<int> conj;
    if (n.op == Op::kForall) {
      NegConj(body, conj);
    } else {
      Conj(body, conj);
    }
    for (const auto& v : names) PopVar(v);

    std::vector<std::uint32_t> sorted_block = slots;
    std::sort(sorted_block.begin(), sorted_block.end());
    auto in_block = [&](std::uint32_t s) {
      return std::binary_search(sorted_block.begin(), sorted_block.end(), s);
    };

    n.has_quantifier = true;
    for (int c : conj) {
      for (std::uint32_t s : nodes[c].free_slots) {
        if (!in_block(s)) n.free_slots.push_back(s);
      }
    }
    std::sort(n.free_slots.begin(), n.free_slots.end());
    n.free_slots.erase(std::unique(n.free_slots.begin(), n.free_slots.end()), n.free_slots.end());

    // Greedy order: repeatedly bind the variable completing the most
    // conjuncts, breaking ties by how many conjuncts mention it.
    std::vector<std::vector<std::uint32_t>> need(conj.size());
    for (std::size_t i = 0; i < conj.size(); ++i) {
      for (std::uint32_t s : nodes[conj[i]].free_slots) {
        if (in_block(s)) need[i].push_back(s);
      }
    }
    std::vector<bool> placed(conj.size(), false);
    for (std::size_t i = 0; i < conj.size(); ++i) {
      if (need[i].empty()) {
        n.pre.push_back(conj[i]);
        placed[i] = true;
      }
    }
    std::vector<std::uint32_t> bound_so_far;
    std::vector<std::uint32_t> remaining = slots;
    while (!remaining.empty()) {
      std::size_t best = 0;
      long best_score = -1;
      for (std::size_t k = 0; k < remaining.size(); ++k) {
        std::uint32_t cand = remaining[k];
        long complete = 0, touch = 0;
        for (std::size_t i = 0; i < conj.size(); ++i) {
          if (placed[i]) continue;
          bool mentions = false, done = true;
          for (std::uint32_t s : need[i]) {
            if (s == cand) {
              mentions = true;
            } else if (std::find(bound_so_far.begin(), bound_so_far.end(), s) ==
                       bound_so_far.end()) {
              done = false;
            }
          }
          if (mentions) {
            ++touch;
            if (done) ++complete;
          }
        }
        long score = complete * 1024 + touch;
        if (score > best_score) {
          best_score = score;
          best = k;
        }
      }
      std::uint32_t s = remaining[best];
      remaining.erase(remaining.begin() + static_cast<long>(best));
      bound_so_far.push_back(s);
      n.block.push_back(s);
      std::vector<int> here;
      for (std::size_t i = 0; i < conj.size(); ++i) {
        if (placed[i]) continue;
        bool done = std::all_of(need[i].begin(), need[i].end(), [&](std::uint32_t t) {
          return std::find(bound_so_far.begin(), bound_so_far.end(), t) != bound_so_far.end();
        });
        if (done) {
          here.push_back(conj[i]);
          placed[i] = true;
        }
      }
      n.after.push_back(std::move(here));
    }
    return Add(std::move(n));
  }

  void SetupMemo() {
    std::uint64_t size = m->size();
    for (Node& n : nodes) {
      if (!n.has_quantifier || n.free_slots.size() > 2) continue;
      std::uint64_t cells = 1;
      for (std::size_t i = 0; i < n.free_slots.size(); ++i) cells *= size;
      if (cells > kMemoLimit) continue;
      n.memo_slots = n.free_slots;
      n.memo.assign(cells, -1);
    }
  }

  // ---- evaluation

  Element Value(const Arg& a) const { return a.is_slot ? env[a.value] : a.value; }

  bool Eval(int id) {
    Node& n = nodes[id];
    if (!n.memo.empty()) {
      std::uint64_t key = 0;
      for (std::uint32_t s : n.memo_slots) key = key * m->size() + env[s];
      std::int8_t& cell = n.memo[key];
      if (cell < 0) cell = Compute(n) ? 1 : 0;
      return cell == 1;
    }
    return Compute(n);
  }

  bool AllTrue(const std::vector<int>& ids) {
    for (int c : ids) {
      if (!Eval(c)) return false;
    }
    return true;
  }

  bool Compute(const Node& n) {
    switch (n.op) {
      case Op::kTrue:
        return true;
      case Op::kFalse:
        return false;
      case Op::kAtom: {
        Element buf[16];
        std::vector<Element> big;
        Element* p = buf;
        if (n.args.size() > 16) {
          big.resize(n.args.size());
          p = big.data();
        }
        for (std::size_t i = 0; i < n.args.size(); ++i) p[i] = Value(n.args[i]);
        return n.rel->contains(std::span<const Element>(p, n.args.size()));
      }
      case Op::kEq:
        return Value(n.args[0]) == Value(n.args[1]);
      case Op::kNot:
        return !Eval(n.kids[0]);
      case Op::kAnd:
        for (int k : n.kids) {
          if (!Eval(k)) return false;
        }
        return true;
      case Op::kOr:
        for (int k : n.kids) {
          if (Eval(k)) return true;
        }
        return false;
      case Op::kImplies:
        return !Eval(n.kids[0]) || Eval(n.kids[1]);
      case Op::kIff:
        return Eval(n.kids[0]) == Eval(n.kids[1]);
      case Op::kExists:
        return AllTrue(n.pre) && Exists(n, 0);
      case Op::kForall:
        return !(AllTrue(n.pre) && Exists(n, 0));
      case Op::kCount: {
        std::uint64_t stop = n.mode == CountMode::kAtLeast ? n.r : std::uint64_t{n.r} + 1;
        std::uint64_t count = 0;
        if (stop > 0 && AllTrue(n.pre)) Count(n, 0, count, stop);
        switch (n.mode) {
          case CountMode::kAtLeast:
            return count >= n.r;
          case CountMode::kAtMost:
            return count <= n.r;
          case CountMode::kExactly:
            return count == n.r;
        }
      }
    }
    return false;
  }

  bool Exists(const Node& n, std::size_t d) {
    if (d == n.block.size()) return true;
    std::uint32_t slot = n.block[d];
    for (Element e = 0; e < m->size(); ++e) {
      env[slot] = e;
      if (AllTrue(n.after[d]) && Exists(n, d + 1)) return true;
    }
    return false;
  }

  void Count(const Node& n, std::size_t d, std::uint64_t& count, std::uint64_t stop) {
    if (d == n.block.size()) {
      ++count;
      return;
    }
    std::uint32_t slot = n.block[d];
    for (Element e = 0; e < m->size() && count < stop; ++e) {
      env[slot] = e;
      if (AllTrue(n.after[d])) Count(n, d + 1, count, stop);
    }
  }
};

Evaluator::Evaluator(const FiniteStructure& m, const Formula& f, const VarTuple& inputs)
    : impl_(std::make_unique<Impl>()) {
  impl_->m = &m;
  impl_->inputs = inputs;
  for (const auto& v : f.free_vars()) {
    if (!inputs.contains(v)) {
      throw Error(ErrorCode::kUnboundVariable, "free variable '" + v + "' is not assigned");
    }
  }
  for (const auto& v : inputs) impl_->PushVar(v);
  impl_->root = impl_->Compile(f);
  impl_->scope.clear();
  impl_->env.assign(impl_->slot_count, 0);
  impl_->SetupMemo();
}

Evaluator::~Evaluator() = default;
Evaluator::Evaluator(Evaluator&&) noexcept = default;
Evaluator& Evaluator::operator=(Evaluator&&) noexcept = default;

bool Evaluator::operator()(std::span<const Element> values) {
  if (values.size() != impl_->inputs.size()) {
    throw Error(ErrorCode::kInvalidArgument, "expected " + std::to_string(impl_->inputs.size()) +
                                                 " values, got " + std::to_string(values.size()));
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] >= impl_->m->size()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "value " + std::to_string(values[i]) + " for '" + impl_->inputs[i] +
                      "' outside universe of size " + std::to_string(impl_->m->size()));
    }
    impl_->env[i] = values[i];
  }
  return impl_->Eval(impl_->root);
}

bool Evaluator::operator()(const Assignment& assignment) {
  std::vector<Element> values;
  for (const auto& v : impl_->inputs) {
    auto it = assignment.find(v);
    if (it == assignment.end()) {
      throw Error(ErrorCode::kUnboundVariable, "free variable '" + v + "' is not assigned");
    }
    values.push_back(it->second);
  }
  return (*this)(values);
}

const VarTuple& Evaluator::inputs() const { return impl_->inputs; }

bool Evaluate(const FiniteStructure& m, const Formula& f, const Assignment& alpha) {
  VarTuple inputs(f.free_vars());
  Evaluator ev(m, f, inputs);
  return ev(alpha);
}

bool SolutionSet::contains(const std::vector<Element>& t) const {
  return std::binary_search(tuples.begin(), tuples.end(), t);
}

// Enumerates the solutions of a formula in a tuple of variables with the
// same ordered block search the evaluator uses for quantifiers.
class SolutionSearch {
 public:
  template <typename Visit>
  static void Run(const FiniteStructure& m, const Formula& f, const VarTuple& vars,
                  const Assignment& alpha, Visit&& visit) {
    std::vector<std::string> rest;
    for (const auto& v : f.free_vars()) {
      if (vars.contains(v)) continue;
      if (!alpha.contains(v)) {
        throw Error(ErrorCode::kUnboundVariable, "free variable '" + v + "' is not assigned");
      }
      rest.push_back(v);
    }
    if (vars.empty()) {
      Evaluator ev(m, f, VarTuple(rest));
      if (ev(alpha)) visit(std::span<const Element>());
      return;
    }
    Evaluator::Impl impl;
    impl.m = &m;
    impl.inputs = VarTuple(rest);
    for (const auto& v : rest) impl.PushVar(v);
    impl.root = impl.Compile(Formula::Count(CountMode::kAtLeast, 0, vars, f));
    impl.scope.clear();
    impl.env.assign(impl.slot_count, 0);
    impl.SetupMemo();
    for (std::size_t i = 0; i < rest.size(); ++i) {
      Element e = alpha.at(rest[i]);
      if (e >= m.size()) {
        throw Error(ErrorCode::kInvalidArgument, "value " + std::to_string(e) + " for '" +
                                                     rest[i] + "' outside universe");
      }
      impl.env[i] = e;
    }
    const Node& n = impl.nodes[impl.root];
    if (!impl.AllTrue(n.pre)) return;
    const auto first = static_cast<std::uint32_t>(rest.size());
    std::vector<Element> out(vars.size());
    auto walk = [&](auto&& self, std::size_t d) -> void {
      if (d == n.block.size()) {
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = impl.env[first + i];
        visit(std::span<const Element>(out));
        return;
      }
      std::uint32_t slot = n.block[d];
      for (Element e = 0; e < m.size(); ++e) {
        impl.env[slot] = e;
        if (impl.AllTrue(n.after[d])) self(self, d + 1);
      }
    };
    walk(walk, 0);
  }
};

SolutionSet Solutions(const FiniteStructure& m, const Formula& f, const VarTuple& vars,
                      const Assignment& alpha) {
  SolutionSet out{.vars = vars, .tuples = {}};
  SolutionSearch::Run(m, f, vars, alpha,
                      [&](std::span<const Element> t) { out.tuples.emplace_back(t.begin(), t.end()); });
  std::sort(out.tuples.begin(), out.tuples.end());
  return out;
}

std::uint64_t CountSolutions(const FiniteStructure& m, const Formula& f, const VarTuple& vars,
                             const Assignment& alpha) {
  std::uint64_t count = 0;
  SolutionSearch::Run(m, f, vars, alpha, [&](std::span<const Element>) { ++count; });
  return count;
}

}  // namespace malg
