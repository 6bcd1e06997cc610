#include "hypercov/trial_io.hpp"

#include <charconv>
#include <ostream>
#include <sstream>

#include "hypercov/error.hpp"
#include "json.hpp"

namespace hypercov {

using nlohmann::json;

void write_trials_csv(std::ostream& out, std::span<const Trial> trials) {
    std::string line;
    for (std::size_t t = 0; t < trials.size(); ++t) {
        out << "# trial " << (t + 1) << '\n';
        for (std::uint32_t r = 0; r < trials[t].rows(); ++r) {
            line.clear();
            for (auto v : trials[t].point(r)) {
                if (!line.empty()) line += ',';
                line += std::to_string(v);
            }
            out << line << '\n';
        }
    }
}

std::string trials_to_csv(std::span<const Trial> trials) {
    std::ostringstream out;
    write_trials_csv(out, trials);
    return out.str();
}

std::vector<Trial> parse_trials_csv(std::string_view text, const DesignSpec& spec) {
    std::vector<Trial> trials;
    std::vector<std::uint32_t> block;
    block.reserve(static_cast<std::size_t>(spec.n()) * spec.d());
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty() || line.front() == '#') continue;

        std::uint32_t fields = 0;
        while (true) {
            const auto comma = line.find(',');
            std::string_view field = line.substr(0, comma);
            std::uint32_t v = 0;
            auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
            if (ec != std::errc() || ptr != field.data() + field.size())
                fail(ErrorKind::Structural, "line " + std::to_string(line_no) + ": bad integer '" +
                                                std::string(field) + "'");
            block.push_back(v);
            ++fields;
            if (comma == std::string_view::npos) break;
            line.remove_prefix(comma + 1);
        }
        if (fields != spec.d())
            fail(ErrorKind::Structural, "line " + std::to_string(line_no) + ": expected " +
                                            std::to_string(spec.d()) + " columns, got " + std::to_string(fields));
        if (block.size() == static_cast<std::size_t>(spec.n()) * spec.d()) {
            trials.emplace_back(spec, std::move(block));
            block = {};
        }
    }
    if (!block.empty()) fail(ErrorKind::Structural, "trailing partial trial block");
    return trials;
}

namespace {

json envelope_json(const TrialEnvelope& e) {
    const DesignSpec& spec = e.trial.spec();
    json j;
    j["spec"] = {{"d", spec.d()}, {"n", spec.n()}};
    if (spec.p()) j["spec"]["p"] = *spec.p();
    j["seed"] = e.seed;
    j["kind"] = std::string(to_string(e.kind));
    if (e.index) j["trial"] = *e.index;
    json points = json::array();
    for (std::uint32_t r = 0; r < e.trial.rows(); ++r) {
        auto pt = e.trial.point(r);
        points.push_back(std::vector<std::uint32_t>(pt.begin(), pt.end()));
    }
    j["points"] = std::move(points);
    return j;
}

TrialEnvelope envelope_from(const json& j) {
    try {
        const auto& s = j.at("spec");
        std::optional<std::uint32_t> p;
        if (s.contains("p") && !s.at("p").is_null()) p = s.at("p").get<std::uint32_t>();
        DesignSpec spec(s.at("d").get<std::uint32_t>(), s.at("n").get<std::uint32_t>(), p);
        auto rows = j.at("points").get<std::vector<std::vector<std::uint32_t>>>();
        TrialEnvelope e{Trial(spec, rows), j.at("seed").get<std::uint64_t>(),
                        parse_sampler_kind(j.at("kind").get<std::string>()), std::nullopt};
        if (j.contains("trial")) e.index = j.at("trial").get<std::uint64_t>();
        return e;
    } catch (const json::exception& ex) {
        fail(ErrorKind::Structural, std::string("bad trial envelope: ") + ex.what());
    }
}

// Leading '#' lines (provenance headers) are skipped.
json parse_json(std::string_view text) {
    while (!text.empty() && text.front() == '#') {
        const auto eol = text.find('\n');
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    }
    try {
        return json::parse(text);
    } catch (const json::exception& ex) {
        fail(ErrorKind::Structural, std::string("bad JSON: ") + ex.what());
    }
}

}  // namespace

std::string to_json(const TrialEnvelope& envelope) { return envelope_json(envelope).dump(); }

std::string to_json(std::span<const TrialEnvelope> envelopes) {
    std::string out = "[\n";
    for (std::size_t i = 0; i < envelopes.size(); ++i) {
        out += envelope_json(envelopes[i]).dump();
        out += i + 1 < envelopes.size() ? ",\n" : "\n";
    }
    out += "]\n";
    return out;
}

TrialEnvelope parse_trial_envelope(std::string_view text) { return envelope_from(parse_json(text)); }

std::vector<TrialEnvelope> parse_trial_envelopes(std::string_view text) {
    const json j = parse_json(text);
    if (!j.is_array()) return {envelope_from(j)};
    std::vector<TrialEnvelope> out;
    for (const auto& item : j) out.push_back(envelope_from(item));
    return out;
}

}  // namespace hypercov
