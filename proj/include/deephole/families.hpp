#ifndef DEEPHOLE_FAMILIES_HPP
#define DEEPHOLE_FAMILIES_HPP

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "deephole/grs.hpp"

namespace deephole {

enum class Family {
    DegreeK,       // a x^k + tail
    GeneralizedB,  // a (x - b)^(q-2) + tail, b outside D
    EvenChar,      // a x^(q-3) + tail over GF(2^m), k = q - 4
};

std::string_view family_name(Family f) noexcept;
Family parse_family(std::string_view name);

struct FamilyWordSpec {
    Family family;
    Elem a;                   // nonzero leading coefficient
    Elem b = 0;               // GeneralizedB only
    std::optional<Polynomial> tail;  // degree <= k-1; absent means zero
};

// Zeros on D of (x-b)^(q-2) - g and of 1 - (x-b) g coincide.
bool zero_set_equivalence(const FieldPtr& field, Elem b, const Polynomial& g, std::span<const Elem> set);

// The defining polynomial of a family member; validates the spec against
// the code (SpecViolation / EvaluationSetContainsB).
Polynomial family_polynomial(const GrsCode& code, const FamilyWordSpec& spec);
Word construct_family_word(const GrsCode& code, const FamilyWordSpec& spec);

// The degree k-1 polynomial g_S for which (x-b)^(q-2) - g_S vanishes on D
// exactly at S. Built at b = 0 and shifted back.
Polynomial witness_gS(const GrsCode& code, std::span<const Elem> subset, Elem b);

bool verify_family(const GrsCode& code, const FamilyWordSpec& spec, EngineOptions opts = {});

struct ScanRow {
    int degree;
    Polynomial poly;
    std::size_t distance;
    bool is_deep_hole;
};

struct DegreeSummary {
    int degree;
    std::size_t representatives = 0;
    std::size_t deep_holes = 0;
    std::map<std::size_t, std::size_t> histogram;  // distance -> count
};

struct ScanResult {
    std::vector<ScanRow> rows;
    std::vector<DegreeSummary> summary;
};

// Exact distances for every monic f of degree in [deg_lo, deg_hi] whose
// coefficients below degree k vanish. Adding a codeword or scaling by a unit
// preserves the distance, so these q^(d-k) polynomials per degree cover all
// words of that degree.
ScanResult scan_deep_holes(const GrsCode& code, int deg_lo, int deg_hi, EngineOptions opts = {});

// `degree,poly_enc_coeffs,distance,is_deep_hole` with a header row.
std::string scan_csv(const ScanResult& result);

}  // namespace deephole

#endif
