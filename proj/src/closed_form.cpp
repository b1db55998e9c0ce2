#include "vgph/closed_form.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace vgph {

namespace {

constexpr int kSchemaVersion = 1;

nlohmann::json pair_to_json(const ScalingPair& p) {
    return {{"g", p.g.m}, {"f", p.f.m}};
}

ScalingPair pair_from_json(const nlohmann::json& j) {
    ScalingPair p;
    const auto g = j.at("g").get<std::array<double, 9>>();
    const auto f = j.at("f").get<std::array<double, 9>>();
    p.g.m = g;
    p.f.m = f;
    return p;
}

}  // namespace

void ClosedFormConstants::validate() const {
    for (int i = 0; i < 10; ++i)
        if (!basis[static_cast<size_t>(i)].valid(/*strict=*/true)) {
            std::ostringstream msg;
            msg << "closed-form constants: basis pair " << (i + 1)
                << " has an element with F <= G";
            throw SchemaError(msg.str());
        }
    if (!output.valid(/*strict=*/true))
        throw SchemaError("closed-form constants: output pair has an element with F <= G");
}

Tensor3 predict_pressure_hessian(const Tensor3& a, NondimScale scale,
                                 const ClosedFormConstants& k,
                                 TracePolicy policy) {
    const BasisBundle b = compute_basis(a, scale, policy);

    Tensor3 p_scaled;
    for (size_t i = 0; i < 10; ++i)
        p_scaled += k.coefficients[i] * apply_scaling(b.t[i], k.basis[i]);

    Tensor3 p = unscale_output(p_scaled, k.output, scale.epsilon);
    // the published scaling matrices carry rounded (slightly asymmetric)
    // digits; a Hessian is symmetric, so enforce that before the trace step
    p = symmetric_part(p);
    return with_trace(p, -trace(a * a));
}

ClosedFormConstants load_constants(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open constants file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError("constants file is not valid JSON: " + std::string(e.what()));
    }
    try {
        if (j.at("schema").get<int>() != kSchemaVersion)
            throw SchemaError("unsupported constants schema version");
        if (j.at("kind").get<std::string>() != "closed-form-constants")
            throw SchemaError("not a closed-form constants file");
        ClosedFormConstants k;
        const auto coeff = j.at("coefficients").get<std::array<double, 10>>();
        k.coefficients = coeff;
        const auto& scaling = j.at("scaling");
        const auto& basis = scaling.at("basis");
        if (basis.size() != 10)
            throw SchemaError("constants file must carry exactly 10 basis pairs");
        for (size_t i = 0; i < 10; ++i) k.basis[i] = pair_from_json(basis[i]);
        k.output = pair_from_json(scaling.at("output"));
        k.validate();
        return k;
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError("constants file schema violation: " + std::string(e.what()));
    }
}

void save_constants(const ClosedFormConstants& k, const std::string& path) {
    nlohmann::json basis = nlohmann::json::array();
    for (const ScalingPair& p : k.basis) basis.push_back(pair_to_json(p));
    const nlohmann::json j = {
        {"schema", kSchemaVersion},
        {"kind", "closed-form-constants"},
        {"coefficients", k.coefficients},
        {"scaling", {{"basis", basis}, {"output", pair_to_json(k.output)}}},
    };
    std::ofstream out(path);
    if (!out) throw IoError("cannot open constants file for writing: " + path);
    out << j.dump(1) << "\n";
    if (!out) throw IoError("short write to constants file: " + path);
}

}  // namespace vgph
