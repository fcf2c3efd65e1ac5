// Presentation constructions that embed an arbitrary finitely presented
// group into groups with prescribed homology or weight.

#ifndef FPG_CONSTRUCT_HPP_
#define FPG_CONSTRUCT_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fpg/outcome.hpp"
#include "fpg/presentation.hpp"

namespace fpg {

  struct AuditEntry {
    std::string  check;
    CheckOutcome outcome;
  };

  struct GadgetReport {
    Presentation output;
    std::string  provenance;
    // input generator name -> its image in `output`
    std::vector<std::pair<std::string, Word>> generator_map;
    std::vector<AuditEntry>                   audit;
    // Named stages of the construction (e.g. the perfect group P).
    std::vector<std::pair<std::string, Presentation>> stages;

    [[nodiscard]] bool audit_passed() const;
    [[nodiscard]] Presentation const* stage(std::string_view name) const;
  };

  struct AuditOptions {
    std::size_t max_cosets = 10000;
    // Run coset enumerations; exact checks always run.
    bool semidecide = true;
  };

  [[nodiscard]] GadgetReport perfect_embed(Presentation const& g,
                                           bool                addendum = false,
                                           AuditOptions const& options = {});

  [[nodiscard]] GadgetReport k3_embed(Presentation const& g,
                                      AuditOptions const& options = {});

  [[nodiscard]] GadgetReport k3_minus_k2(Presentation const& g,
                                         AuditOptions const& options = {});

  [[nodiscard]] GadgetReport s_minus_k3(Presentation const& g,
                                        AuditOptions const& options = {});

  [[nodiscard]] GadgetReport m_minus_s(Presentation const& g,
                                       AuditOptions const& options = {});

  // u1, u2 index the designated generators of u; w is a word over u that
  // only uses them. Throws PresentationError otherwise.
  [[nodiscard]] GadgetReport weight_gadget(Presentation const& u,
                                           generator_index     u1,
                                           generator_index     u2,
                                           Word const&         w,
                                           AuditOptions const& options = {});

  // g must be freely related; ys designates one generator of y per relator
  // of g. Generator names of g, u and y must be disjoint.
  [[nodiscard]] GadgetReport
  homology_gadget(Presentation const&              g,
                  Presentation const&              u,
                  Presentation const&              y,
                  std::span<generator_index const> ys,
                  Word const&                      w,
                  AuditOptions const&              options = {});

  [[nodiscard]] GadgetReport whitehead_gadget(Presentation const& p,
                                              Word const&         w,
                                              AuditOptions const& options = {});

  // The binary icosahedral group <c, d | c^2 = d^3 = (c d^-1)^5>, order 120.
  [[nodiscard]] Presentation binary_icosahedral();
  // <c, d | c^2, d^3, (c d)^5>
  [[nodiscard]] Presentation alternating_a5();

  [[nodiscard]] nlohmann::json to_json(GadgetReport const& r);

}  // namespace fpg

#endif  // FPG_CONSTRUCT_HPP_
