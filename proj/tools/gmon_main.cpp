// gmon: command-line front end over the C API.

#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gammamonoid.h"

namespace {

struct StrDeleter {
  void operator()(char* p) const { gma_str_free(p); }
};
using CStr = std::unique_ptr<char, StrDeleter>;

struct InstDeleter {
  void operator()(gma_instance* p) const { gma_free(p); }
};
using Inst = std::unique_ptr<gma_instance, InstDeleter>;

int status_exit(gma_status s) {
  if (s == GMA_OK) return 0;
  if (s == GMA_FALSE) return 1;
  return 2;
}

int fail(gma_status s, const CStr& err) {
  std::fprintf(stderr, "error (%s): %s\n", gma_status_name(s),
               err ? err.get() : "unknown");
  return status_exit(s) == 0 ? 2 : status_exit(s);
}

struct LoadOpts {
  std::string file;
  std::string builtin;
  std::string generator;  // csv of element indices
  bool allow_nonabelian = false;
};

void add_load_options(CLI::App* cmd, LoadOpts& o) {
  auto* f = cmd->add_option("file", o.file, "instance file, '-' for stdin");
  auto* b =
      cmd->add_option("--builtin", o.builtin, "builtin instance spec");
  f->excludes(b);
  cmd->add_option("--generator", o.generator,
                  "automorphism permutation (csv of indices); replaces a "
                  "trivial action by the cyclic action it generates");
  cmd->add_flag("--allow-nonabelian", o.allow_nonabelian,
                "accept a nonabelian acting group with a warning");
}

Inst load_instance(const LoadOpts& o, int& rc) {
  rc = 0;
  gma_instance* raw = nullptr;
  char* e = nullptr;
  gma_status s;
  if (!o.builtin.empty()) {
    s = gma_builtin(o.builtin.c_str(), &raw, &e);
  } else if (o.file.empty()) {
    std::fprintf(stderr, "error: no instance given (file or --builtin)\n");
    rc = 2;
    return nullptr;
  } else if (o.file == "-") {
    std::string text;
    char buf[4096];
    size_t got;
    while ((got = std::fread(buf, 1, sizeof buf, stdin)) > 0)
      text.append(buf, got);
    s = gma_parse(text.c_str(), &raw, &e);
  } else {
    s = gma_parse_file(o.file.c_str(), &raw, &e);
  }
  CStr err(e);
  if (s != GMA_OK) {
    rc = fail(s, err);
    return nullptr;
  }
  Inst inst(raw);

  if (!o.generator.empty()) {
    std::vector<int> perm;
    std::string cur;
    for (char c : o.generator + ",") {
      if (c == ',') {
        if (!cur.empty()) perm.push_back(std::stoi(cur));
        cur.clear();
      } else {
        cur += c;
      }
    }
    gma_instance* raw2 = nullptr;
    char* e2 = nullptr;
    s = gma_with_generator(inst.get(), perm.data(),
                           static_cast<int>(perm.size()), &raw2, &e2);
    CStr err2(e2);
    if (s != GMA_OK) {
      rc = fail(s, err2);
      return nullptr;
    }
    inst.reset(raw2);
  }

  if (!gma_group_abelian(inst.get())) {
    if (o.allow_nonabelian) {
      std::fprintf(stderr, "warning: acting group is not abelian\n");
    } else {
      std::fprintf(stderr,
                   "error (invalid): acting group is not abelian "
                   "(use --allow-nonabelian to proceed)\n");
      rc = 2;
      return nullptr;
    }
  }
  return inst;
}

int run_report(gma_status s, const CStr& text, const CStr& err) {
  if (text) std::fputs(text.get(), stdout);
  if (s != GMA_OK && s != GMA_FALSE) return fail(s, err);
  return status_exit(s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite Gamma-monoid toolkit"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit JSON reports")->configurable(false);

  LoadOpts lo_validate, lo_props, lo_ideals, lo_quotient, lo_series, lo_jh,
      lo_print;
  std::string ideal_csv;
  std::vector<std::string> series1, series2;
  std::string demo_name;
  std::string builtin_spec;
  int corpus_max = 4;
  std::string corpus_filters, corpus_source = "all-cyclic-subgroups",
                              corpus_dir = "corpus-out";

  auto* c_validate = app.add_subcommand("validate", "run all validators");
  add_load_options(c_validate, lo_validate);
  auto* c_props = app.add_subcommand(
      "props", "conical / cancellative / refinement / minimal elements");
  add_load_options(c_props, lo_props);
  auto* c_ideals =
      app.add_subcommand("ideals", "ideal lattice, covers, atoms, simplicity");
  add_load_options(c_ideals, lo_ideals);
  auto* c_quotient = app.add_subcommand("quotient", "quotient by an ideal");
  add_load_options(c_quotient, lo_quotient);
  c_quotient->add_option("--ideal", ideal_csv, "ideal as csv of elements")
      ->required();
  auto* c_series = app.add_subcommand(
      "series", "composition series, factors, chain conditions");
  add_load_options(c_series, lo_series);
  auto* c_jh = app.add_subcommand(
      "jh", "Schreier refinement and equivalence certificate");
  add_load_options(c_jh, lo_jh);
  c_jh->add_option("--series1", series1,
                   "intermediate terms of the first series (repeatable)");
  c_jh->add_option("--series2", series2,
                   "intermediate terms of the second series (repeatable)");
  auto* c_demo = app.add_subcommand("demo", "replay a named worked example");
  c_demo->add_option("name", demo_name, "paper-counterexample or paper-shift")
      ->required();
  auto* c_print =
      app.add_subcommand("print", "canonical rendering of an instance");
  add_load_options(c_print, lo_print);
  auto* c_builtin =
      app.add_subcommand("builtin", "emit a builtin instance file");
  c_builtin->add_option("spec", builtin_spec, "builtin spec")->required();
  auto* c_corpus =
      app.add_subcommand("corpus", "emit the enumerated instance corpus");
  c_corpus->add_option("--max-size", corpus_max, "largest monoid size");
  c_corpus->add_option("--filters", corpus_filters,
                       "csv subset of refinement,conical,cancellative");
  c_corpus->add_option(
      "--action-source", corpus_source,
      "trivial | all-cyclic-subgroups | full-automorphism-subgroups");
  c_corpus->add_option("--out-dir", corpus_dir, "output directory");

  CLI11_PARSE(app, argc, argv);

  auto report_cmd = [&](const LoadOpts& lo, auto fn) {
    int rc = 0;
    Inst inst = load_instance(lo, rc);
    if (!inst) return rc;
    char* out = nullptr;
    char* e = nullptr;
    gma_status s = fn(inst.get(), as_json ? 1 : 0, &out, &e);
    return run_report(s, CStr(out), CStr(e));
  };

  if (c_validate->parsed()) return report_cmd(lo_validate, gma_report_validate);
  if (c_props->parsed()) return report_cmd(lo_props, gma_report_props);
  if (c_ideals->parsed()) return report_cmd(lo_ideals, gma_report_ideals);
  if (c_quotient->parsed())
    return report_cmd(lo_quotient,
                      [&](const gma_instance* h, int j, char** o, char** e) {
                        return gma_report_quotient(h, ideal_csv.c_str(), j, o,
                                                   e);
                      });
  if (c_series->parsed()) return report_cmd(lo_series, gma_report_series);
  if (c_jh->parsed()) {
    std::vector<const char*> s1, s2;
    for (const auto& s : series1) s1.push_back(s.c_str());
    for (const auto& s : series2) s2.push_back(s.c_str());
    return report_cmd(lo_jh,
                      [&](const gma_instance* h, int j, char** o, char** e) {
                        return gma_report_jh(h, s1.data(),
                                             static_cast<int>(s1.size()),
                                             s2.data(),
                                             static_cast<int>(s2.size()), j, o,
                                             e);
                      });
  }
  if (c_demo->parsed()) {
    char* out = nullptr;
    char* e = nullptr;
    gma_status s = gma_report_demo(demo_name.c_str(), as_json ? 1 : 0, &out, &e);
    return run_report(s, CStr(out), CStr(e));
  }
  if (c_print->parsed()) {
    int rc = 0;
    Inst inst = load_instance(lo_print, rc);
    if (!inst) return rc;
    char* out = nullptr;
    gma_status s = gma_print(inst.get(), &out);
    CStr text(out);
    if (text) std::fputs(text.get(), stdout);
    return status_exit(s);
  }
  if (c_builtin->parsed()) {
    gma_instance* raw = nullptr;
    char* e = nullptr;
    gma_status s = gma_builtin(builtin_spec.c_str(), &raw, &e);
    CStr err(e);
    if (s != GMA_OK) return fail(s, err);
    Inst inst(raw);
    char* out = nullptr;
    gma_print(inst.get(), &out);
    CStr text(out);
    if (text) std::fputs(text.get(), stdout);
    return 0;
  }
  if (c_corpus->parsed()) {
    char* out = nullptr;
    char* e = nullptr;
    gma_status s = gma_corpus_emit(
        corpus_max, corpus_filters.empty() ? nullptr : corpus_filters.c_str(),
        corpus_source.c_str(), corpus_dir.c_str(), as_json ? 1 : 0, &out, &e);
    return run_report(s, CStr(out), CStr(e));
  }
  return 2;
}
