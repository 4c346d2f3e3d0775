#pragma once

#include "unimod/decide.hpp"

#include <iosfwd>
#include <string>

namespace unimod {

class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// On-disk instance: a Hopf algebra block, an optional comodule-algebra
/// block, optional named Frobenius forms and grouplike candidates.
struct InstanceFile {
    unsigned cyclotomic_order = 1;
    HopfPresentation hopf;
    std::optional<ComodulePresentation> comodule;
    std::vector<NamedForm> frobenius_forms;
    std::vector<Vector> grouplike_candidates;
};

InstanceFile parse_instance(const std::string& text);
InstanceFile load_instance(const std::string& path);
std::string emit_instance(const InstanceFile& f);

InstanceFile instance_of(const HopfData& h);
InstanceFile instance_of(const ComoduleAlgebra& c);

/// Builds the validated pair from a parsed file; form_name selects among the
/// attached Frobenius forms (empty = first).
ComoduleAlgebra comodule_from_instance(const InstanceFile& f, const std::string& form_name = "",
                                       std::uint64_t seed = kDefaultPitSeed);

std::string scalar_json_str(const Scalar& s);
Scalar scalar_from_json_str(const std::string& text, unsigned order);

/// "x + 2*g" style element printing over basis names.
std::string element_str(const Vector& v, const std::vector<std::string>& names);
/// "del(x) - del(g)" style covector printing.
std::string covector_str(const Vector& v, const std::vector<std::string>& names);

std::string invariants_text(const HopfData& h);
std::string invariants_json(const HopfData& h);
std::string report_text(const UnimodularReport& r, const std::vector<std::string>& basis_names);
std::string report_json(const UnimodularReport& r);

/// Parses "0,1,z,2" style lists: each item a rational, z, z^k, or r*z^k.
std::vector<Scalar> parse_scalar_list(const std::string& text, unsigned order);

}  // namespace unimod
