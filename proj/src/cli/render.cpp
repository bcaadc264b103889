#include <limits>

#include "mms/cli.hpp"
#include "mms/errors.hpp"

namespace mms::cli
{

namespace
{

std::string render_rows(const Partition &p)
{
    std::string out;
    for (std::size_t j = p.length(); j-- > 0;) {
        for (int i = 0; i < p.parts()[j]; ++i) {
            out += "[]";
        }
        if (j != 0) {
            out += '\n';
        }
    }
    return out;
}

} // namespace

std::string render_diagram(const Diagram &d)
{
    if (d.dim() == 2) {
        return render_rows(diagram_to_partition(d));
    }
    if (d.dim() == 3) {
        std::string out;
        const std::vector<Partition> slices = layers(d);
        for (std::size_t k = 0; k < slices.size(); ++k) {
            if (k != 0) {
                out += '\n';
            }
            out += "k=" + std::to_string(k) + ":\n" + render_rows(slices[k]);
        }
        return out;
    }
    throw DimensionError("cannot draw a " + std::to_string(d.dim()) + "-dimensional diagram");
}

json exact_json(const Integer &z)
{
    if (z.fits_slong_p()) {
        return json(static_cast<std::int64_t>(z.get_si()));
    }
    return json(z.get_str());
}

json exact_json(const Rational &value)
{
    Rational q = value;
    q.canonicalize();
    if (q.get_den() == 1) {
        return exact_json(Integer(q.get_num()));
    }
    return json(q.get_str());
}

json polynomial_json(const ExactPolynomial &p)
{
    json coeffs = json::array();
    for (const Rational &c : p.coeffs()) {
        coeffs.push_back(exact_json(c));
    }
    return json{{"text", to_string(p)}, {"coefficients", std::move(coeffs)}};
}

json diagram_json(const Diagram &d)
{
    json out = json::object();
    out["dim"] = d.dim();
    out["boxes"] = d.size();
    if (d.dim() == 2) {
        out["partition"] = diagram_to_partition(d).parts();
    } else if (d.dim() == 3) {
        json slices = json::array();
        for (const Partition &p : layers(d)) {
            slices.push_back(p.parts());
        }
        out["layers"] = std::move(slices);
    } else {
        json list = json::array();
        for (const Box &b : d) {
            list.push_back(b.coords);
        }
        out["box_list"] = std::move(list);
    }
    return out;
}

json pair_json(const DegreePair &p)
{
    return json{{"gen_degrees", p.gen_degrees}, {"syz_degrees", p.syz_degrees}};
}

json Report::to_json() const
{
    return json{{"command", command}, {"inputs", inputs}, {"results", results}, {"warnings", warnings}};
}

std::string Report::to_text() const
{
    std::string out;
    for (const auto &line : lines) {
        out += line;
        out += '\n';
    }
    for (const auto &w : warnings) {
        out += "warning: " + w + '\n';
    }
    return out;
}

} // namespace mms::cli
