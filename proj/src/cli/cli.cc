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

#include "malg/cli/cli.h"

#include <filesystem>
#include <optional>
#include <set>

#include "CLI11.hpp"
#include "malg/algebraicity/ma_bound.h"
#include "malg/cli/family_arg.h"
#include "malg/cli/report.h"
#include "malg/corpus/corpus.h"
#include "malg/error.h"
#include "malg/rewrite/base.h"
#include "malg/rewrite/exact_count.h"
#include "malg/rewrite/messy.h"
#include "malg/rewrite/negate.h"
#include "malg/rewrite/rank1.h"
#include "malg/rewrite/strongly_minimal.h"
#include "malg/rewrite/to_p.h"
#include "malg/semantics/oracle.h"
#include "malg/semantics/structure_io.h"
#include "malg/syntax/parser.h"
#include "malg/syntax/printer.h"

namespace malg::cli {

namespace {

using nlohmann::json;

struct Options {
  bool human = false;
  std::optional<long> seed;
  std::string formula, formula_a, formula_b;
  std::string vars, count_vars, y_vars, x_vars, y;
  std::string family, structure, out_dir;
  std::vector<std::string> constants, relations, kernels, certified;
  std::string base = "strongly-minimal";
  std::uint32_t r = 0;
  std::optional<std::uint64_t> n, bound;
  std::size_t suffix = kDefaultSuffix;
};

// Exit statuses.
constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct Context {
  Options opt;
  std::optional<Family> family;
  std::optional<FiniteStructure> structure;
  Signature sig;

  void Load() {
    if (!opt.family.empty()) {
      family = Generate(ParseFamilyArg(opt.family, opt.constants));
      sig = family->front().signature();
    }
    if (!opt.structure.empty()) {
      structure = LoadStructure(opt.structure);
      sig = structure->signature();
    }
    for (const auto& r : opt.relations) {
      auto slash = r.find('/');
      if (slash == std::string::npos) {
        throw Error(ErrorCode::kInvalidArgument, "relation must look like NAME/ARITY, got '" + r + "'");
      }
      sig.AddRelation(r.substr(0, slash), std::stoul(r.substr(slash + 1)));
    }
    for (const auto& c : opt.constants) {
      std::string name = c.substr(0, c.find('='));
      if (!sig.has_constant(name)) sig.AddConstant(name);
    }
  }

  Formula ParseText(const std::string& text) const { return Parse(text, sig); }

  const Family& RequireFamily() const {
    if (!family) throw Error(ErrorCode::kInvalidArgument, "this command needs --family");
    return *family;
  }
};

VarTuple FreeOf(const Formula& f) { return VarTuple(f.free_vars()); }

VarTuple UnionFree(const Formula& a, const Formula& b) {
  std::set<std::string> all(a.free_vars().begin(), a.free_vars().end());
  all.insert(b.free_vars().begin(), b.free_vars().end());
  return VarTuple(std::vector<std::string>(all.begin(), all.end()));
}

std::vector<Rank1Kernel> ParseKernels(const Context& ctx) {
  std::vector<Rank1Kernel> out;
  for (const auto& k : ctx.opt.kernels) {
    auto semi = k.find(';');
    if (semi == std::string::npos) {
      throw Error(ErrorCode::kInvalidArgument, "kernel must look like 'FORMULA;x y z', got '" + k + "'");
    }
    out.push_back({ctx.ParseText(k.substr(0, semi)), VarTuple::Parse(k.substr(semi + 1))});
  }
  return out;
}

std::unique_ptr<BaseCountRewriter> MakeBase(const Context& ctx) {
  const std::string& b = ctx.opt.base;
  if (b == "strongly-minimal") {
    return std::make_unique<StronglyMinimalBase>(ctx.RequireFamily(), ctx.opt.suffix);
  }
  if (b == "rank1") {
    return std::make_unique<Rank1Base>(ctx.RequireFamily(), ParseKernels(ctx), ctx.opt.suffix);
  }
  if (b == "fail") return std::make_unique<FailingBase>();
  throw Error(ErrorCode::kInvalidArgument, "unknown base '" + b + "'");
}

int Verified(Report& report, const Context& ctx, const Formula& input, const RewriteResult& res) {
  report.inputs()["formula"] = Print(input);
  report.SetResult(res);
  auto verdicts = VerifyOnFamily(ctx.RequireFamily(), input, res.output,
                                 UnionFree(input, res.output), res.min_universe_size);
  report.AddVerdicts(verdicts);
  bool ok = AllEquivalent(verdicts);
  report.outputs()["verified"] = ok;
  return ok ? kOk : kFailed;
}

int RunParse(const Context& ctx, Report& report) {
  Formula f = ctx.ParseText(ctx.opt.formula);
  report.inputs()["formula"] = ctx.opt.formula;
  report.outputs()["formula"] = Print(f);
  report.outputs()["free"] = f.free_vars();
  report.outputs()["nodes"] = f.node_count();
  return kOk;
}

int RunClassify(const Context& ctx, Report& report) {
  Formula f = ctx.ParseText(ctx.opt.formula);
  MaEvidence ev;
  if (ctx.family) ev = CertifyAtoms(*ctx.family, f, ctx.opt.suffix);
  for (const auto& k : ctx.opt.certified) ev.Add(ctx.ParseText(k));
  ClassTags tags = ClassifyAll(f, ev);
  report.inputs()["formula"] = Print(f);
  json list = json::array();
  for (ClassTag t : tags.list()) list.push_back(std::string(ClassTagName(t)));
  json kernels = json::array();
  for (const auto& k : ev.kernels) kernels.push_back(Print(k));
  report.inputs()["certified"] = kernels;
  report.outputs()["class"] = std::string(ClassTagName(tags.primary()));
  report.outputs()["tags"] = list;
  return kOk;
}

int RunCheckMa(const Context& ctx, Report& report) {
  Formula f = ctx.ParseText(ctx.opt.formula);
  VarTuple z = ctx.opt.vars.empty() ? FreeOf(f) : VarTuple::Parse(ctx.opt.vars);
  report.inputs()["formula"] = Print(f);
  report.inputs()["vars"] = z.names();
  if (ctx.structure) {
    MABoundCertificate cert = MaBound(*ctx.structure, f, z);
    report.outputs()["certificate"] = json::parse(CertificateToJsonText(cert));
    bool ok = !ctx.opt.bound || cert.bound <= *ctx.opt.bound;
    report.outputs()["within_bound"] = ok;
    return ok ? kOk : kFailed;
  }
  FamilyStabilityReport rep = FamilyStability(ctx.RequireFamily(), f, z, ctx.opt.suffix);
  json bounds = json::array();
  for (const auto& [id, n] : rep.bounds) bounds.push_back({{"structure", id}, {"bound", n}});
  report.outputs()["bounds"] = bounds;
  report.outputs()["verdict"] = rep.VerdictText();
  report.outputs()["vacuous"] = rep.vacuous;
  bool ok = rep.verdict == Verdict::kStable &&
            (!ctx.opt.bound || rep.stable_bound <= *ctx.opt.bound);
  return ok ? kOk : kFailed;
}

int RunEquiv(const Context& ctx, Report& report) {
  Formula a = ctx.ParseText(ctx.opt.formula_a);
  Formula b = ctx.ParseText(ctx.opt.formula_b);
  report.inputs()["formula_a"] = Print(a);
  report.inputs()["formula_b"] = Print(b);
  std::vector<const FiniteStructure*> targets;
  if (ctx.structure) targets.push_back(&*ctx.structure);
  if (ctx.family) {
    for (const auto& m : *ctx.family) targets.push_back(&m);
  }
  if (targets.empty()) throw Error(ErrorCode::kInvalidArgument, "equiv needs --structure or --family");
  std::vector<StructureVerdict> verdicts;
  for (const FiniteStructure* m : targets) {
    EquivalenceResult eq = EquivalentOn(*m, a, b);
    verdicts.push_back({m->id(), m->size(), true, eq.equivalent, eq.counterexample});
  }
  report.AddVerdicts(verdicts);
  bool ok = AllEquivalent(verdicts);
  report.outputs()["equivalent"] = ok;
  return ok ? kOk : kFailed;
}

int RunCorpus(const Context& ctx, Report& report) {
  const Family& family = ctx.RequireFamily();
  report.inputs()["family"] = ctx.opt.family;
  json files = json::array();
  if (!ctx.opt.out_dir.empty()) {
    std::filesystem::create_directories(ctx.opt.out_dir);
    for (const auto& m : family) {
      auto path = std::filesystem::path(ctx.opt.out_dir) / (m.id() + ".struct");
      StoreStructure(m, path);
      files.push_back(path.string());
    }
    report.outputs()["files"] = files;
  } else {
    json structures = json::object();
    for (const auto& m : family) structures[m.id()] = json::parse(StructureToJsonText(m));
    report.outputs()["structures"] = structures;
  }
  return kOk;
}

int RunRewrite(const std::string& op, const Context& ctx, Report& report) {
  report.inputs()["construction"] = op;
  const Family& family = ctx.RequireFamily();
  Formula f = ctx.ParseText(ctx.opt.formula);
  if (op == "exact-count") {
    VarTuple x = VarTuple::Parse(ctx.opt.count_vars);
    VarTuple y = ctx.opt.y_vars.empty() ? FreeOf(f).without(x) : VarTuple::Parse(ctx.opt.y_vars);
    auto base = MakeBase(ctx);
    RewriteResult res = ExactCountToPreferred(f, x, y, ctx.opt.r, *base, family, ctx.opt.n,
                                              CertifyAtoms(family, f, ctx.opt.suffix));
    return Verified(report, ctx, Formula::Count(CountMode::kExactly, ctx.opt.r, x, f), res);
  }
  if (op == "negate") {
    MaEvidence ev = CertifyAtoms(family, f, ctx.opt.suffix);
    auto p = AsPreferred(f, ev);
    if (!p) throw Error(ErrorCode::kShape, "not a preferred formula: " + Print(f));
    auto base = MakeBase(ctx);
    RewriteResult res = NegatePreferred(*p, *base, family, ctx.opt.n, ev);
    return Verified(report, ctx, Formula::Not(f), res);
  }
  if (op == "messy") {
    VarTuple x = VarTuple::Parse(ctx.opt.x_vars);
    std::string y = ctx.opt.y;
    if (y.empty()) {
      VarTuple rest = FreeOf(f).without(x);
      if (rest.size() != 1) throw Error(ErrorCode::kInvalidArgument, "pass --y");
      y = rest[0];
    }
    RewriteResult res = MessyReduce(f, x, y, family, CertifyAtoms(family, f, ctx.opt.suffix));
    return Verified(report, ctx, Formula::Exists(x, f), res);
  }
  if (op == "to-p") {
    auto base = MakeBase(ctx);
    RewriteResult res = ToP(f, *base, family);
    return Verified(report, ctx, f, res);
  }
  if (op == "strongly-minimal") {
    std::string y = ctx.opt.y;
    if (y.empty()) {
      if (f.free_vars().size() != 1) throw Error(ErrorCode::kInvalidArgument, "pass --y");
      y = f.free_vars().front();
    }
    StronglyMinimalRewrite sm = RewriteStronglyMinimal(family, f, y, ctx.opt.suffix);
    json q = json::array();
    for (const Term& t : sm.q) q.push_back(ToString(t));
    report.outputs()["q"] = q;
    report.outputs()["cofinite"] = sm.cofinite;
    return Verified(report, ctx, f, sm.result);
  }
  if (op == "rank1") {
    VarTuple z = VarTuple::Parse(ctx.opt.count_vars);
    VarTuple rest = FreeOf(f).without(z);
    std::string x = ctx.opt.y.empty() ? (rest.size() == 1 ? rest[0] : "") : ctx.opt.y;
    if (x.empty()) throw Error(ErrorCode::kInvalidArgument, "pass --y for the distinguished variable");
    Rank1Config cfg = EstimateRank1Config(family, ParseKernels(ctx), f, z, x, ctx.opt.r,
                                          ctx.opt.suffix);
    json q = json::array();
    for (const Term& t : cfg.q) q.push_back(ToString(t));
    report.outputs()["config"] = {{"ell_star", cfg.ell_star}, {"q", q},
                                  {"n_theta", cfg.n_theta}, {"threshold", cfg.threshold}};
    RewriteResult res = Rank1Delta(cfg, f, z, x, ctx.opt.r);
    return Verified(report, ctx, Formula::Count(CountMode::kAtMost, ctx.opt.r, z, f), res);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown rewrite '" + op + "'");
}

bool IsVerificationError(ErrorCode code) {
  return code == ErrorCode::kBaseFailure || code == ErrorCode::kNotStable ||
         code == ErrorCode::kStructureTooSmall || code == ErrorCode::kBoundTooSmall;
}

void AddFamilyOptions(CLI::App* sub, Options& o) {
  sub->add_option("--family", o.family, "family kind:lo..hi");
  sub->add_option("--const", o.constants, "constant NAME=INT for the family");
  sub->add_option("--structure", o.structure, "structure file");
  sub->add_option("--rel", o.relations, "extra relation NAME/ARITY");
  sub->add_option("--suffix", o.suffix, "stability suffix length");
}

}  // namespace

int Dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Context ctx;
  Options& o = ctx.opt;
  CLI::App app{"Mutual algebraicity checker and rewriter", "malg"};
  app.require_subcommand(1);
  app.add_flag("--human", o.human, "human-readable report");
  app.add_option("--seed", o.seed, "reserved for randomized suites; unused");

  auto* parse = app.add_subcommand("parse", "parse and print a formula");
  parse->add_option("--formula", o.formula)->required();
  AddFamilyOptions(parse, o);

  auto* classify = app.add_subcommand("classify", "syntactic class of a formula");
  classify->add_option("--formula", o.formula)->required();
  classify->add_option("--certified", o.certified, "kernel taken as mutually algebraic");
  AddFamilyOptions(classify, o);

  auto* check = app.add_subcommand("check-ma", "mutual algebraicity bound");
  check->add_option("--formula", o.formula)->required();
  check->add_option("--vars", o.vars);
  check->add_option("--bound", o.bound);
  AddFamilyOptions(check, o);

  auto* equiv = app.add_subcommand("equiv", "brute-force equivalence");
  equiv->add_option("--formula-a", o.formula_a)->required();
  equiv->add_option("--formula-b", o.formula_b)->required();
  AddFamilyOptions(equiv, o);

  auto* corpus = app.add_subcommand("corpus", "generate a family");
  corpus->add_option("--out", o.out_dir, "directory for structure files");
  AddFamilyOptions(corpus, o);

  auto* rewrite = app.add_subcommand("rewrite", "run a construction and verify it");
  rewrite->require_subcommand(1);
  std::vector<std::string> ops = {"exact-count", "negate", "messy", "to-p", "strongly-minimal",
                                  "rank1"};
  std::vector<CLI::App*> op_apps;
  for (const auto& name : ops) {
    auto* sub = rewrite->add_subcommand(name);
    sub->add_option("--formula", o.formula)->required();
    sub->add_option("--count-vars", o.count_vars);
    sub->add_option("--y-vars", o.y_vars);
    sub->add_option("--x-vars", o.x_vars);
    sub->add_option("--y", o.y);
    sub->add_option("--r", o.r);
    sub->add_option("--n", o.n);
    sub->add_option("--base", o.base, "strongly-minimal, rank1 or fail");
    sub->add_option("--kernel", o.kernels, "rank-1 kernel 'FORMULA;x y z'");
    AddFamilyOptions(sub, o);
    op_apps.push_back(sub);
  }

  std::vector<const char*> argv{"malg"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  Report report(args);
  int status = kOk;
  try {
    ctx.Load();
    if (parse->parsed()) {
      status = RunParse(ctx, report);
    } else if (classify->parsed()) {
      status = RunClassify(ctx, report);
    } else if (check->parsed()) {
      status = RunCheckMa(ctx, report);
    } else if (equiv->parsed()) {
      status = RunEquiv(ctx, report);
    } else if (corpus->parsed()) {
      status = RunCorpus(ctx, report);
    } else {
      for (std::size_t i = 0; i < ops.size(); ++i) {
        if (op_apps[i]->parsed()) status = RunRewrite(ops[i], ctx, report);
      }
    }
  } catch (const Error& e) {
    report.SetError(std::string(ErrorCodeName(e.code())), e.what());
    err << "error: " << e.what() << "\n";
    status = IsVerificationError(e.code()) ? kFailed : kUsage;
  } catch (const std::exception& e) {
    report.SetError("internal", e.what());
    err << "error: " << e.what() << "\n";
    status = kUsage;
  }
  report.Write(out, o.human);
  return status;
}

}  // namespace malg::cli
