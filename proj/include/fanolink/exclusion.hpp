#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fanolink/catalog.hpp"
#include "fanolink/error.hpp"
#include "fanolink/rational.hpp"

namespace fanolink {

enum class ExclusionKind { SmoothPoint, Curve };

inline std::string_view to_string(ExclusionKind k) { return k == ExclusionKind::SmoothPoint ? "smooth-point" : "curve"; }

struct ExclusionReport {
    ExclusionKind kind = ExclusionKind::Curve;
    int family = 0;
    int h_degree = 0; // smooth-point test only
    Rational test_value;
    Rational threshold;
    bool certified = false;
    std::vector<std::string> notes;

    friend bool operator==(const ExclusionReport&, const ExclusionReport&) = default;
};

/// Degree of the auxiliary divisor H: a1*a2*a3, except 15 for family 110.
inline int default_h_degree(const FamilyRecord& record)
{
    if (record.id == 110) {
        return 15;
    }
    return record.weights[1] * record.weights[2] * record.weights[3];
}

/*
 * H . M^2 / n^2 for a mobile M in |-nK_X| and H of degree h (in units of
 * A): h * index^2 * d / prod(a). A non-canonical smooth centre would need
 * mult > 4n^2 while H . M^2 bounds it, so values <= 4 certify exclusion.
 */
inline ExclusionReport smooth_point_test(const FamilyRecord& record, int h_degree)
{
    if (h_degree < 1) {
        throw Error(ErrorKind::InvalidInput, "h degree must be positive");
    }
    ExclusionReport rep;
    rep.kind = ExclusionKind::SmoothPoint;
    rep.family = record.id;
    rep.h_degree = h_degree;
    const Rational i(record.index);
    rep.test_value = Rational(h_degree) * i * i * Rational(record.degree) / Rational(record.weights.product());
    rep.threshold = Rational(4);
    rep.certified = rep.test_value <= rep.threshold;
    rep.notes.push_back("assumes the base locus of the H-system through the point is zero-dimensional");
    if (!rep.certified && (record.id == 100 || record.id == 101 || record.id == 102)) {
        rep.notes.push_back("deviation: the printed smooth-point argument expects a value <= 4, exact evaluation gives " +
                            rep.test_value.str());
    }
    return rep;
}

inline ExclusionReport smooth_point_test(const FamilyRecord& record)
{
    return smooth_point_test(record, default_h_degree(record));
}

/// (-K_X)^3 <= 1 excludes curves as maximal centres.
inline ExclusionReport curve_test(const FamilyRecord& record)
{
    ExclusionReport rep;
    rep.kind = ExclusionKind::Curve;
    rep.family = record.id;
    rep.test_value = anticanonical_cube(record);
    rep.threshold = Rational(1);
    rep.certified = rep.test_value <= rep.threshold;
    return rep;
}

enum class FibreKind { Hypersurface, CompleteIntersection };

/*
 * The pencil x1^a0 = lambda * x0^a1 gives a fibration over P^1 whose general
 * fibre S has K_S = (fibre_canonical_degree) * A|_S. It is a del Pezzo
 * fibration (so X is not solid) when that degree is negative.
 */
struct FibrationWitness {
    int a0 = 0;
    int a1 = 0;
    bool index_check = false;
    FibreKind fibre = FibreKind::Hypersurface;
    WeightVector fibre_ambient;
    std::vector<int> fibre_degrees;
    int fibre_canonical_degree = 0;

    friend bool operator==(const FibrationWitness&, const FibrationWitness&) = default;

    std::string fibre_str() const
    {
        std::string s = "S_";
        if (fibre_degrees.size() == 1) {
            s += std::to_string(fibre_degrees.front());
        } else {
            s += "{" + std::to_string(fibre_degrees[0]) + "," + std::to_string(fibre_degrees[1]) + "}";
        }
        return s + " ⊂ P" + fibre_ambient.str();
    }
};

inline std::optional<FibrationWitness> fibration_witness(const FamilyRecord& record)
{
    const WeightVector& a = record.weights;
    FibrationWitness w;
    w.a0 = a[0];
    w.a1 = a[1];
    w.index_check = a[0] * a[1] < record.index;
    if (!w.index_check) {
        return std::nullopt;
    }
    if (a[0] == 1) {
        // x1 = lambda * x0^a1 eliminates x1.
        w.fibre = FibreKind::Hypersurface;
        w.fibre_ambient = WeightVector({a[0], a[2], a[3], a[4]});
        w.fibre_degrees = {record.degree};
        w.fibre_canonical_degree = record.degree - w.fibre_ambient.sum();
    } else {
        w.fibre = FibreKind::CompleteIntersection;
        w.fibre_ambient = a;
        w.fibre_degrees = {record.degree, a[0] * a[1]};
        w.fibre_canonical_degree = record.degree + a[0] * a[1] - a.sum();
    }
    if (w.fibre_canonical_degree >= 0) {
        throw Error(ErrorKind::VerificationFailure, "family " + std::to_string(record.id) +
                                                        ": fibre is not del Pezzo despite a0*a1 < index");
    }
    return w;
}

struct SolidityPartition {
    std::vector<int> with_witness;
    std::vector<int> without_witness;
};

inline SolidityPartition solidity_summary(const std::vector<FamilyRecord>& records)
{
    SolidityPartition p;
    for (auto& r : records) {
        (fibration_witness(r) ? p.with_witness : p.without_witness).push_back(r.id);
    }
    return p;
}

inline SolidityPartition solidity_summary() { return solidity_summary(load_catalog()); }

} // namespace fanolink
