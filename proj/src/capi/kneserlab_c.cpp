#include "kneserlab/kneserlab.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>

#include "kneserlab/bench.hpp"
#include "kneserlab/chroma.hpp"
#include "kneserlab/complex.hpp"
#include "kneserlab/defect.hpp"
#include "kneserlab/error.hpp"
#include "kneserlab/homology.hpp"
#include "kneserlab/kneser.hpp"
#include "kneserlab/limits.hpp"
#include "kneserlab/setcore.hpp"
#include "kneserlab/topo.hpp"

struct kl_set_system {
  kneserlab::SetSystem value;
};
struct kl_hypergraph {
  kneserlab::Hypergraph value;
};
struct kl_complex {
  kneserlab::SimplicialComplex value;
};

namespace {

namespace kl = kneserlab;

std::string& last_error() {
  thread_local std::string message;
  return message;
}

kl_status fail(kl_status status, const char* message) {
  try {
    last_error() = message;
  } catch (...) {
  }
  return status;
}

template <class F>
kl_status guarded(F&& body) {
  try {
    last_error().clear();
    body();
    return KL_OK;
  } catch (const kl::ParseError& e) {
    return fail(KL_PARSE, e.what());
  } catch (const kl::InvalidArgument& e) {
    return fail(KL_INVALID_ARGUMENT, e.what());
  } catch (const kl::ResourceLimit& e) {
    return fail(KL_RESOURCE, e.what());
  } catch (const kl::VerificationFailure& e) {
    return fail(KL_VERIFICATION, e.what());
  } catch (const std::bad_alloc&) {
    return fail(KL_RESOURCE, "out of memory");
  } catch (const std::exception& e) {
    return fail(KL_INTERNAL, e.what());
  } catch (...) {
    return fail(KL_INTERNAL, "unknown error");
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw kl::InvalidArgument(what);
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

kl::ComplexGuard to_guard(const kl_guard* g) {
  kl::ComplexGuard out;
  if (g) {
    out.max_faces = g->max_faces;
    out.max_nonzeros = g->max_nonzeros;
  }
  return out;
}

kl::RandomSpec to_spec(const kl_random_spec& s) {
  kl::RandomSpec out;
  out.seed = s.seed;
  out.n_max = s.n_max;
  out.m_max = s.m_max;
  out.max_set_size = s.max_set_size;
  out.r_min = s.r_min;
  out.r_max = s.r_max;
  out.s_max = s.s_max;
  return out;
}

std::uint64_t budget_or_default(std::uint64_t b) { return b == 0 ? kl::node_budget_from_env() : b; }

kl::Colouring colouring_from(const int* colours, size_t len) {
  require(colours != nullptr || len == 0, "colours must not be null");
  return kl::Colouring::from(std::vector<int>(colours, colours + len));
}

}  // namespace

extern "C" {

const char* kl_last_error(void) { return last_error().c_str(); }

const char* kl_version(void) { return "1.0.0"; }

void kl_string_free(char* s) { std::free(s); }

uint64_t kl_default_node_budget(void) { return kl::node_budget_from_env(); }

kl_guard kl_default_guard(void) { return kl_guard{kl::kDefaultMaxFaces, kl::kDefaultMaxNonzeros}; }

kl_random_spec kl_default_random_spec(void) {
  const kl::RandomSpec d;
  return kl_random_spec{d.seed, d.n_max, d.m_max, d.max_set_size, d.r_min, d.r_max, d.s_max};
}

kl_status kl_set_system_parse(const char* text, kl_set_system** out) {
  return guarded([&] {
    require(text && out, "null argument");
    *out = new kl_set_system{kl::parse_instance(text)};
  });
}

kl_status kl_set_system_complete(int n, int k, kl_set_system** out) {
  return guarded([&] {
    require(out, "null argument");
    *out = new kl_set_system{kl::complete_k_subsets(n, k)};
  });
}

kl_status kl_set_system_worked(kl_family family, int n, kl_set_system** out) {
  return guarded([&] {
    require(out, "null argument");
    require(family == KL_EXAMPLE1 || family == KL_COUNTEREXAMPLE1, "unknown family");
    const auto f = family == KL_EXAMPLE1 ? kl::WorkedFamily::example1 : kl::WorkedFamily::counterexample1;
    *out = new kl_set_system{kl::worked_family(f, n)};
  });
}

kl_status kl_set_system_random(uint64_t seed, int n, int m, int max_set_size, kl_set_system** out) {
  return guarded([&] {
    require(out, "null argument");
    *out = new kl_set_system{kl::random_set_system(seed, n, m, max_set_size)};
  });
}

kl_status kl_random_instance(const kl_random_spec* spec, int index, kl_set_system** out, int* r, int* s) {
  return guarded([&] {
    require(spec && out && r && s, "null argument");
    auto inst = kl::random_instance(to_spec(*spec), index);
    *r = inst.r;
    *s = inst.s;
    *out = new kl_set_system{std::move(inst.system)};
  });
}

kl_status kl_set_system_serialize(const kl_set_system* t, char** out) {
  return guarded([&] {
    require(t && out, "null argument");
    *out = copy_string(kl::serialize(t->value));
  });
}

int kl_set_system_ground_size(const kl_set_system* t) { return t ? t->value.ground_size() : 0; }
int kl_set_system_size(const kl_set_system* t) { return t ? t->value.size() : 0; }
void kl_set_system_free(kl_set_system* t) { delete t; }

kl_status kl_hypergraph_build(const kl_set_system* t, int r, int s, kl_variant variant, kl_hypergraph** out) {
  return guarded([&] {
    require(t && out, "null argument");
    require(variant == KL_SET_EDGES || variant == KL_MULTISET_EDGES, "unknown variant");
    const auto v = variant == KL_SET_EDGES ? kl::Variant::set_edges : kl::Variant::multiset_edges;
    *out = new kl_hypergraph{kl::build_kneser(t->value, r, s, v)};
  });
}

kl_status kl_hypergraph_parse(const char* text, kl_hypergraph** out) {
  return guarded([&] {
    require(text && out, "null argument");
    *out = new kl_hypergraph{kl::parse_hypergraph(text)};
  });
}

kl_status kl_hypergraph_serialize(const kl_hypergraph* h, char** out) {
  return guarded([&] {
    require(h && out, "null argument");
    *out = copy_string(kl::serialize(h->value));
  });
}

int kl_hypergraph_node_count(const kl_hypergraph* h) { return h ? h->value.node_count() : 0; }
int kl_hypergraph_uniformity(const kl_hypergraph* h) { return h ? h->value.uniformity() : 0; }
size_t kl_hypergraph_edge_count(const kl_hypergraph* h) { return h ? h->value.edges().size() : 0; }
void kl_hypergraph_free(kl_hypergraph* h) { delete h; }

kl_status kl_defect(const kl_set_system* t, int r, int s, uint64_t node_budget, kl_defect_result* out,
                    char** witness) {
  return guarded([&] {
    require(t && out, "null argument");
    const auto res = kl::colourability_defect(t->value, r, s, budget_or_default(node_budget));
    if (witness) *witness = copy_string(kl::compact_witness(res.witness));
    *out = kl_defect_result{res.value, res.max_cover, res.nodes};
  });
}

kl_status kl_defect_oracle(const kl_set_system* t, int r, int s, int* out) {
  return guarded([&] {
    require(t && out, "null argument");
    *out = kl::defect_oracle(t->value, r, s);
  });
}

kl_status kl_chromatic(const kl_hypergraph* h, uint64_t node_budget, int* chi, char** colours) {
  return guarded([&] {
    require(h && chi, "null argument");
    const auto res = kl::chromatic_number(h->value, budget_or_default(node_budget));
    if (colours) *colours = copy_string(kl::format_colouring(res.witness));
    *chi = res.chi;
  });
}

kl_status kl_is_proper(const kl_hypergraph* h, const int* colours, size_t len, int* proper) {
  return guarded([&] {
    require(h && proper, "null argument");
    *proper = kl::is_proper(h->value, colouring_from(colours, len)) ? 1 : 0;
  });
}

kl_status kl_bound_report(const char* id, const kl_set_system* t, int r, int s, unsigned flags,
                          uint64_t node_budget, char** tsv, char** note, int* all_pass) {
  return guarded([&] {
    require(id && t && tsv, "null argument");
    kl::BoundOptions options;
    options.comb = (flags & KL_BOUND_COMB) != 0;
    options.topo = (flags & KL_BOUND_TOPO) != 0;
    options.oracle = (flags & KL_BOUND_ORACLE) != 0;
    options.node_budget = node_budget;
    const auto rep = kl::bound_report(id, t->value, r, s, options);
    const bool timings = (flags & KL_BOUND_TIMINGS) != 0;
    std::string text = kl::format_reports({rep}, timings);
    char* note_copy = note ? copy_string(rep.topo_note) : nullptr;
    *tsv = copy_string(text);
    if (note) *note = note_copy;
    if (all_pass) *all_pass = rep.all_pass() ? 1 : 0;
  });
}

kl_status kl_reproduce_worked(uint64_t node_budget, int timings, char** tsv, int* all_pass) {
  return guarded([&] {
    require(tsv, "null argument");
    const auto reps = kl::reproduce_worked(node_budget);
    bool ok = true;
    for (const auto& r : reps) ok = ok && r.all_pass();
    *tsv = copy_string(kl::format_reports(reps, timings != 0));
    if (all_pass) *all_pass = ok ? 1 : 0;
  });
}

kl_status kl_verify_suite(const kl_random_spec* spec, int count, uint64_t node_budget, int timings, char** tsv,
                          int* failures) {
  return guarded([&] {
    require(spec && tsv, "null argument");
    require(count >= 0, "count must be nonnegative");
    const auto reps = kl::verify_bound_suite(to_spec(*spec), count, node_budget);
    int bad = 0;
    for (const auto& r : reps) bad += r.all_pass() ? 0 : 1;
    *tsv = copy_string(kl::format_reports(reps, timings != 0));
    if (failures) *failures = bad;
  });
}

kl_status kl_complex_box(const kl_hypergraph* h, const kl_guard* guard, kl_complex** out) {
  return guarded([&] {
    require(h && out, "null argument");
    *out = new kl_complex{kl::box_complex(h->value, to_guard(guard))};
  });
}

kl_status kl_complex_deleted_join(int n, int r, int w, const kl_guard* guard, kl_complex** out) {
  return guarded([&] {
    require(out, "null argument");
    *out = new kl_complex{kl::deleted_join_simplex(n, r, w, to_guard(guard))};
  });
}

kl_status kl_complex_colour(int m, int r, const kl_guard* guard, kl_complex** out) {
  return guarded([&] {
    require(out, "null argument");
    *out = new kl_complex{kl::colour_complex(m, r, to_guard(guard))};
  });
}

kl_status kl_complex_order(int n, int r, int s, const kl_guard* guard, kl_complex** out) {
  return guarded([&] {
    require(out, "null argument");
    const auto g = to_guard(guard);
    *out = new kl_complex{kl::order_complex(kl::tuple_poset(n, r, s), g)};
  });
}

kl_status kl_complex_subdivide(const kl_complex* k, const kl_guard* guard, kl_complex** out) {
  return guarded([&] {
    require(k && out, "null argument");
    *out = new kl_complex{kl::barycentric_subdivision(k->value, to_guard(guard))};
  });
}

kl_status kl_complex_parse(const char* text, kl_complex** out) {
  return guarded([&] {
    require(text && out, "null argument");
    *out = new kl_complex{kl::parse_complex(text)};
  });
}

kl_status kl_complex_serialize(const kl_complex* k, char** out) {
  return guarded([&] {
    require(k && out, "null argument");
    *out = copy_string(kl::serialize(k->value));
  });
}

int kl_complex_dim(const kl_complex* k) { return k ? k->value.dim() : -1; }
size_t kl_complex_face_count(const kl_complex* k) { return k ? k->value.total_faces() : 0; }

kl_status kl_complex_action(const kl_complex* k, int r, kl_action* out) {
  return guarded([&] {
    require(k && out, "null argument");
    switch (kl::check_action(k->value, r)) {
      case kl::ActionKind::free: *out = KL_ACTION_FREE; break;
      case kl::ActionKind::fixed_point_free: *out = KL_ACTION_FIXED_POINT_FREE; break;
      case kl::ActionKind::neither: *out = KL_ACTION_NEITHER; break;
    }
  });
}

void kl_complex_free(kl_complex* k) { delete k; }

kl_status kl_homology(const kl_complex* k, int p, const kl_guard* guard, kl_betti_summary* summary,
                      char** betti_tsv) {
  return guarded([&] {
    require(k && summary, "null argument");
    const auto chain = kl::chain_complex(k->value, p, to_guard(guard));
    const auto betti = kl::betti_from_ranks(k->value, p, kl::boundary_ranks(chain));
    kl_betti_summary s{};
    s.p = p;
    s.dim = k->value.dim();
    s.connectivity = betti.connectivity;
    s.acyclic = betti.acyclic ? 1 : 0;
    s.euler_ok = kl::euler_identity_holds(k->value, betti) ? 1 : 0;
    s.boundary_ok = kl::boundary_squares_to_zero(chain) ? 1 : 0;
    if (betti_tsv) *betti_tsv = copy_string(kl::format_betti(betti));
    *summary = s;
  });
}

kl_status kl_topo_bound(const kl_hypergraph* h, const kl_guard* guard, int* applicable, int* bound,
                        int* connectivity) {
  return guarded([&] {
    require(h && applicable, "null argument");
    const auto res = kl::topo_bound(h->value, to_guard(guard));
    *applicable = res ? 1 : 0;
    if (res && bound) *bound = res->bound;
    if (res && connectivity) *connectivity = res->connectivity;
  });
}

kl_status kl_verify_colour_map(const kl_hypergraph* h, const int* colours, size_t len, const kl_guard* guard,
                               char** report, int* pass) {
  return guarded([&] {
    require(h && pass, "null argument");
    const auto rep = kl::verify_colour_map(h->value, colouring_from(colours, len), to_guard(guard));
    if (report) {
      std::ostringstream out;
      out << "colours\t" << rep.colours << "\nbox_faces\t" << rep.box_faces << "\nsimplicial\t" << rep.simplicial
          << "\nequivariant\t" << rep.equivariant << "\nimage_dim\t" << rep.image_dim << "\ndim_bound\t"
          << rep.dim_bound << "\n";
      *report = copy_string(out.str());
    }
    *pass = rep.all_pass() ? 1 : 0;
  });
}

kl_status kl_verify_defect_map(const kl_set_system* t, int r, int s, const kl_guard* guard, char** report,
                               int* argument_pass, int* all_pass) {
  return guarded([&] {
    require(t, "null argument");
    const auto rep = kl::verify_defect_map(t->value, r, s, to_guard(guard));
    if (report) {
      std::ostringstream out;
      out << "cd\t" << rep.cd << "\nthreshold\t" << rep.threshold << "\nposet_size\t" << rep.poset_size
          << "\nrestricted_size\t" << rep.restricted_size << "\nwell_defined\t" << rep.well_defined
          << "\nsimplicial\t" << rep.simplicial << "\nfacewise_simplicial\t" << rep.facewise_simplicial
          << "\nequivariant\t" << rep.equivariant << "\nsurjective\t" << rep.surjective << "\nimage_size\t"
          << rep.image_size << "\nbox_faces\t" << rep.box_faces << "\ndim_L\t" << rep.dim_L << "\ndim_L_bound\t"
          << rep.dim_L_bound << "\ncontainment\t" << rep.containment << "\nfacewise_containment\t"
          << rep.facewise_containment << "\n";
      *report = copy_string(out.str());
    }
    if (argument_pass) *argument_pass = rep.argument_pass() ? 1 : 0;
    if (all_pass) *all_pass = rep.all_pass() ? 1 : 0;
  });
}

}  // extern "C"
