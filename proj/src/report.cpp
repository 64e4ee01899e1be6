#include "mary/report.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace mary {

using ordered_json = nlohmann::ordered_json;

namespace {

std::vector<Nat> padded_mults(const MaryPartition& p, std::size_t width)
{
    std::vector<Nat> v(std::max(width, p.mults.size()), 0);
    for (std::size_t i = 0; i < p.mults.size(); ++i)
        v[i] = p.mults[i];
    return v;
}

std::vector<Nat> padded_digits(Nat x, Nat base, std::size_t width)
{
    const BaseMDigits d = to_base_m(x, base);
    std::vector<Nat> v(std::max(width, d.length()), 0);
    for (std::size_t i = 0; i < d.length(); ++i)
        v[i] = d.digits[i];
    return v;
}

std::string join(const std::vector<Nat>& xs)
{
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(xs[i]);
    }
    return s;
}

std::string class_label(const ChainClass& c, std::size_t width)
{
    std::string s = "[";
    for (std::size_t i = 0; i < width; ++i) {
        if (i)
            s += ',';
        if (i <= c.z)
            s += '*';
        else
            s += std::to_string(c.tail[i - c.z - 1]);
    }
    s += ']';
    return s;
}

} // namespace

std::string format_mults(const std::vector<Nat>& mults)
{
    return "[" + join(mults) + "]";
}

std::string format_partition(const MaryPartition& p, std::size_t width)
{
    return format_mults(padded_mults(p, width));
}

std::string count_line(Nat n, Nat base)
{
    const PartitionTriple t = count_triple(n, base);
    if (t.nonsimple.mod(base) != 0)
        throw std::logic_error("non-simple count is not divisible by the base");
    const Natural q = t.nonsimple.div(base);
    return "b=" + t.all.str() + " simple=" + t.simple.str() + " nonsimple=" + t.nonsimple.str()
        + " q=" + q.str();
}

std::string stratification_json(const Stratification& s)
{
    const std::size_t width = to_base_m(s.n, s.base).length();
    const PartitionTriple t = count_triple(s.n, s.base);

    ordered_json doc;
    doc["n"] = std::to_string(s.n);
    doc["m"] = s.base;
    doc["b"] = t.all.str();
    doc["simple_count"] = t.simple.str();
    doc["nonsimple_count"] = t.nonsimple.str();
    doc["fibers"] = ordered_json::array();
    for (const auto& [b, strata] : s.fibers) {
        ordered_json fj;
        fj["b"] = std::to_string(b);
        fj["digits"] = padded_digits(b, s.base, width);
        fj["strata"] = ordered_json::array();
        for (const auto& [z, classes] : strata) {
            ordered_json zj;
            zj["z"] = z;
            zj["classes"] = ordered_json::array();
            for (const ChainClass& c : classes) {
                ordered_json cj;
                cj["tail"] = c.tail;
                cj["r"] = c.r;
                cj["members"] = ordered_json::array();
                for (const MaryPartition& p : c.members)
                    cj["members"].push_back(padded_mults(p, width));
                cj["nops_mod_m"] = nops_histogram(c.members, s.base).counts;
                zj["classes"].push_back(std::move(cj));
            }
            fj["strata"].push_back(std::move(zj));
        }
        doc["fibers"].push_back(std::move(fj));
    }
    return doc.dump(2) + "\n";
}

std::string stratification_text(const Stratification& s)
{
    const std::size_t width = to_base_m(s.n, s.base).length();
    std::ostringstream out;
    out << "n=" << s.n << " m=" << s.base << " " << count_line(s.n, s.base) << "\n";
    if (s.fibers.empty()) {
        out << "N is empty\n";
        return out.str();
    }
    for (const auto& [b, strata] : s.fibers) {
        out << "f^-1(" << b << "); " << b << "=(" << join(padded_digits(b, s.base, width)) << ")_"
            << s.base << "; size=" << s.fiber_size(b) << "\n";
        for (const auto& [z, classes] : strata) {
            out << "  B(" << z << ")\n";
            for (const ChainClass& c : classes) {
                out << "    " << class_label(c, width) << ":";
                /* listed with the count of ones ascending */
                for (std::size_t i = c.members.size(); i-- > 0;)
                    out << " " << format_partition(c.members[i], width);
                const ResidueHistogram h = nops_histogram(c.members, s.base);
                out << "  r=" << c.r << " nops_mod_m=[" << join({h.counts.begin(), h.counts.end()})
                    << "]\n";
            }
        }
    }
    return out.str();
}

std::string witness_json(const VerificationOutcome& o)
{
    const std::size_t width = to_base_m(o.n, o.m).length();
    ordered_json j;
    j["claim"] = o.claim;
    j["n"] = std::to_string(o.n);
    j["m"] = o.m;
    if (o.c)
        j["c"] = *o.c;
    else
        j["c"] = nullptr;
    if (o.histogram)
        j["histogram"] = o.histogram->counts;
    else
        j["histogram"] = nullptr;
    j["members_sample"] = ordered_json::array();
    for (const MaryPartition& p : o.members_sample)
        j["members_sample"].push_back(padded_mults(p, width));
    return j.dump();
}

} // namespace mary
