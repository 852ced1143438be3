#include "gammamonoid.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>

#include "gmon/corpus.hpp"
#include "gmon/instance_io.hpp"
#include "gmon/report.hpp"

using namespace gmon;

struct gma_instance {
  GammaStructure gs;
};

namespace {

char* dup_str(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_err(char** err, const std::string& msg) {
  if (err) *err = dup_str(msg);
}

// Runs f, translating exceptions into the status contract.
template <typename F>
gma_status guarded(char** err, F&& f) {
  try {
    return f();
  } catch (const ParseError& e) {
    set_err(err, e.what());
    return GMA_INVALID;
  } catch (const ValidationError& e) {
    set_err(err, e.what());
    return GMA_INVALID;
  } catch (const std::exception& e) {
    set_err(err, e.what());
    return GMA_INTERNAL;
  }
}

gma_status emit(const Report& r, int as_json, char** out) {
  if (out) *out = dup_str(as_json ? r.json : r.text);
  return r.status == 0 ? GMA_OK : (r.status == 1 ? GMA_FALSE : GMA_INVALID);
}

std::vector<Mask> parse_series_args(const GammaStructure& gs,
                                    const char* const* terms, int n) {
  std::vector<Mask> out;
  for (int i = 0; i < n; ++i) {
    if (!terms[i]) throw ValidationError(Violation{"BadParams", {}});
    out.push_back(parse_elem_set(gs.monoid, terms[i]));
  }
  return out;
}

}  // namespace

extern "C" {

const char* gma_status_name(gma_status s) {
  switch (s) {
    case GMA_OK: return "ok";
    case GMA_FALSE: return "false";
    case GMA_INVALID: return "invalid";
    case GMA_IO_ERROR: return "io-error";
    case GMA_BAD_ARGUMENT: return "bad-argument";
    case GMA_INTERNAL: return "internal";
  }
  return "unknown";
}

gma_status gma_parse(const char* text, gma_instance** out, char** err) {
  if (!text || !out) return GMA_BAD_ARGUMENT;
  *out = nullptr;
  return guarded(err, [&] {
    *out = new gma_instance{parse_instance(text)};
    return GMA_OK;
  });
}

gma_status gma_parse_file(const char* path, gma_instance** out, char** err) {
  if (!path || !out) return GMA_BAD_ARGUMENT;
  *out = nullptr;
  std::ifstream in(path);
  if (!in) {
    set_err(err, std::string("cannot open ") + path);
    return GMA_IO_ERROR;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return gma_parse(buf.str().c_str(), out, err);
}

gma_status gma_builtin(const char* spec, gma_instance** out, char** err) {
  if (!spec || !out) return GMA_BAD_ARGUMENT;
  *out = nullptr;
  return guarded(err, [&] {
    *out = new gma_instance{builtin(spec)};
    return GMA_OK;
  });
}

gma_status gma_with_generator(const gma_instance* in, const int* perm, int len,
                              gma_instance** out, char** err) {
  if (!in || !perm || !out) return GMA_BAD_ARGUMENT;
  *out = nullptr;
  return guarded(err, [&] {
    if (in->gs.m() != 1)
      throw ValidationError(Violation{"NontrivialActionPresent", {}});
    std::vector<int> p(perm, perm + len);
    *out = new gma_instance{cyclic_action(in->gs.monoid, p)};
    return GMA_OK;
  });
}

void gma_free(gma_instance* h) { delete h; }
void gma_str_free(char* s) { std::free(s); }

int gma_size(const gma_instance* h) { return h ? h->gs.n() : 0; }
int gma_group_order(const gma_instance* h) { return h ? h->gs.m() : 0; }

int gma_add(const gma_instance* h, int a, int b) {
  if (!h || a < 0 || b < 0 || a >= h->gs.n() || b >= h->gs.n()) return -1;
  return h->gs.monoid.add(a, b);
}

int gma_act(const gma_instance* h, int alpha, int a) {
  if (!h || alpha < 0 || a < 0 || alpha >= h->gs.m() || a >= h->gs.n())
    return -1;
  return h->gs.act(alpha, a);
}

int gma_group_abelian(const gma_instance* h) {
  if (!h) return 0;
  const Group& g = h->gs.group;
  for (int a = 0; a < g.m; ++a)
    for (int b = 0; b < g.m; ++b)
      if (g.mul(a, b) != g.mul(b, a)) return 0;
  return 1;
}

gma_status gma_print(const gma_instance* h, char** out) {
  if (!h || !out) return GMA_BAD_ARGUMENT;
  *out = dup_str(print_instance(h->gs));
  return GMA_OK;
}

gma_status gma_report_validate(const gma_instance* h, int as_json, char** out,
                               char** err) {
  if (!h) return GMA_BAD_ARGUMENT;
  return guarded(err,
                 [&] { return emit(report_validate(h->gs), as_json, out); });
}

gma_status gma_report_props(const gma_instance* h, int as_json, char** out,
                            char** err) {
  if (!h) return GMA_BAD_ARGUMENT;
  return guarded(err, [&] { return emit(report_props(h->gs), as_json, out); });
}

gma_status gma_report_ideals(const gma_instance* h, int as_json, char** out,
                             char** err) {
  if (!h) return GMA_BAD_ARGUMENT;
  return guarded(err, [&] { return emit(report_ideals(h->gs), as_json, out); });
}

gma_status gma_report_quotient(const gma_instance* h, const char* ideal_csv,
                               int as_json, char** out, char** err) {
  if (!h || !ideal_csv) return GMA_BAD_ARGUMENT;
  return guarded(err, [&] {
    Mask ideal = parse_elem_set(h->gs.monoid, ideal_csv);
    return emit(report_quotient(h->gs, ideal), as_json, out);
  });
}

gma_status gma_report_series(const gma_instance* h, int as_json, char** out,
                             char** err) {
  if (!h) return GMA_BAD_ARGUMENT;
  return guarded(err, [&] { return emit(report_series(h->gs), as_json, out); });
}

gma_status gma_report_jh(const gma_instance* h, const char* const* series1,
                         int n1, const char* const* series2, int n2,
                         int as_json, char** out, char** err) {
  if (!h || (n1 > 0 && !series1) || (n2 > 0 && !series2))
    return GMA_BAD_ARGUMENT;
  return guarded(err, [&] {
    auto mid1 = parse_series_args(h->gs, series1, n1);
    auto mid2 = parse_series_args(h->gs, series2, n2);
    return emit(report_jh(h->gs, mid1, mid2), as_json, out);
  });
}

gma_status gma_report_demo(const char* name, int as_json, char** out,
                           char** err) {
  if (!name) return GMA_BAD_ARGUMENT;
  return guarded(err, [&] { return emit(report_demo(name), as_json, out); });
}

gma_status gma_corpus_emit(int max_size, const char* filters_csv,
                           const char* action_source, const char* out_dir,
                           int as_json, char** out, char** err) {
  if (!action_source || !out_dir) return GMA_BAD_ARGUMENT;
  return guarded(err, [&] {
    CorpusOptions opts;
    opts.max_size = max_size;
    opts.action_source = action_source;
    if (filters_csv && *filters_csv) {
      std::string s(filters_csv);
      std::istringstream in(s);
      std::string tok;
      while (std::getline(in, tok, ',')) {
        if (tok == "refinement")
          opts.filter_refinement = true;
        else if (tok == "conical")
          opts.filter_conical = true;
        else if (tok == "cancellative")
          opts.filter_cancellative = true;
        else
          throw ValidationError(Violation{"BadParams", {}});
      }
    }
    return emit(corpus_emit(opts, out_dir), as_json, out);
  });
}

}  // extern "C"
