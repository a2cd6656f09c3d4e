#include "laea/prompt.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>

#include <nlohmann/json.hpp>

#include "laea/errors.hpp"
#include "laea/scaling.hpp"

namespace laea {

namespace {

constexpr const char* kRegTask =
    "Your task is to predict the numerical value of each object based on its "
    "attributes. These attributes and their corresponding values are outcomes "
    "of a black box function's operation within its decision space. The "
    "target value for each object is determined by a specific mapping from "
    "these attributes through the black box function. Your objective is to "
    "infer the underlying relationships and patterns within the black box "
    "function using the provided historical data. This task goes beyond "
    "simple statistical analyses, such as calculating means or variances, "
    "and requires understanding the complex interactions between the "
    "attributes. Please do not attempt to fit the function using code "
    "similar to Python; instead, directly learn and infer the numerical "
    "values.";

constexpr const char* kClaTask =
    "You are tasked with evaluating each object based on its numerical "
    "attributes to determine its category as 'better' or 'worse'. These "
    "attributes derive from a black box function's decision space, with the "
    "assessment of the label based on the post-mapping function values. Your "
    "role involves discerning the internal variable relationships of the "
    "black box function from provided historical data, moving beyond mere "
    "statistical analyses like calculating means and variances.";

constexpr const char* kRegProcedure =
    "Procedure:\n"
    "1. Analyze the historical data to uncover how attributes relate to the "
    "numerical values.\n"
    "2. Use these insights to predict the numerical value for new objects "
    "based on their attributes.\n"
    "3. Respond using JSON format, e.g. {'Value': 'approximation result'}\n";

constexpr const char* kClaProcedure =
    "Procedure:\n"
    "1. Identify patterns in how attributes are categorized.\n"
    "2. Apply these patterns to assess new objects, determining whether its "
    "category is better or worse.\n"
    "3. Respond using JSON format, e.g. {'Class': 'result'}\n";

constexpr const char* kRegNote =
    "Note:\n"
    "Respond in Json with the format {'Value':'approximation result'} only.";

constexpr const char* kClaNote =
    "Note:\n"
    "Respond in Json with the format {'Class': 'result'} only.";

std::string trim(const std::string& s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::string to_lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) {
        return static_cast<char>(std::tolower(c));
    });
    return s;
}

std::optional<double> parse_full_double(const std::string& text) {
    const std::string t = trim(text);
    if (t.empty()) return std::nullopt;
    char* end = nullptr;
    const double v = std::strtod(t.c_str(), &end);
    if (end != t.c_str() + t.size()) return std::nullopt;
    if (!std::isfinite(v)) return std::nullopt;
    return v;
}

/// First {...} span in the reply, with single quotes normalized so
/// {'Class': 'better'} parses as JSON.
std::optional<nlohmann::json> first_json_object(const std::string& text) {
    const std::size_t open = text.find('{');
    if (open == std::string::npos) return std::nullopt;
    const std::size_t close = text.find('}', open);
    if (close == std::string::npos) return std::nullopt;
    std::string candidate = text.substr(open, close - open + 1);
    std::replace(candidate.begin(), candidate.end(), '\'', '"');
    auto parsed = nlohmann::json::parse(candidate, nullptr, false);
    if (parsed.is_discarded() || !parsed.is_object()) return std::nullopt;
    return parsed;
}

std::optional<nlohmann::json> find_key(const nlohmann::json& obj,
                                       const std::string& key) {
    if (auto it = obj.find(key); it != obj.end())
        return std::make_optional<nlohmann::json>(*it);
    const std::string lowered = to_lower(key);
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (to_lower(it.key()) == lowered)
            return std::make_optional<nlohmann::json>(it.value());
    return std::nullopt;
}

}  // namespace

std::string to_string(SurrogateTask task) {
    return task == SurrogateTask::Reg ? "reg" : "cla";
}

std::string render_feature_list(const DecisionVector& v, int precision) {
    std::string out = "<";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) out += ", ";
        out += format_decimals(v[i], precision);
    }
    out += ">";
    return out;
}

PromptBundle render_prompt(SurrogateTask task, const ScaledDataset& data,
                           const DecisionVector& candidate,
                           int feature_precision, int value_precision) {
    if (data.features.empty())
        throw InvalidInput("render_prompt: empty training dataset");
    const std::size_t rows = data.features.size();
    if (task == SurrogateTask::Reg && data.values.size() != rows)
        throw InvalidInput("render_prompt: values do not match features");
    if (task == SurrogateTask::Cla && data.labels.size() != rows)
        throw InvalidInput("render_prompt: labels do not match features");

    std::string text;
    text.reserve(2048 + rows * (16 * data.features.front().size() + 32));
    if (task == SurrogateTask::Reg) {
        text += kRegTask;
        text += "\n\n";
        text += kRegProcedure;
        text += "\nHistorical Examples:\n";
        for (std::size_t i = 0; i < rows; ++i) {
            text += "Features: ";
            text += render_feature_list(data.features[i], feature_precision);
            text += " Value: ";
            text += format_decimals(data.values[i], value_precision);
            text += "\n";
        }
        text += "\nNew Evaluation:\nFeatures: ";
        text += render_feature_list(candidate, feature_precision);
        text += "\n\n";
        text += kRegNote;
    } else {
        text += kClaTask;
        text += "\n\n";
        text += kClaProcedure;
        text += "\nHistorical Examples:\n";
        for (std::size_t i = 0; i < rows; ++i) {
            text += "Features: ";
            text += render_feature_list(data.features[i], feature_precision);
            text += ", Class: ";
            text += data.labels[i] == 1 ? "better" : "worse";
            text += "\n";
        }
        text += "\nNew Evaluation:\n";
        text += render_feature_list(candidate, feature_precision);
        text += " better or worse?\n\n";
        text += kClaNote;
    }
    return PromptBundle{task, std::move(text), candidate};
}

Prediction parse_llm_response(const std::string& text, SurrogateTask task) {
    const auto obj = first_json_object(text);
    if (!obj) throw MalformedResponse("no JSON object in reply");
    if (task == SurrogateTask::Reg) {
        const auto value = find_key(*obj, "Value");
        if (!value) throw MalformedResponse("reply has no 'Value' key");
        if (value->is_number())
            return Prediction::of_value(value->get<double>());
        if (value->is_string()) {
            if (auto v = parse_full_double(value->get<std::string>()))
                return Prediction::of_value(*v);
        }
        throw MalformedResponse("'Value' is not numeric");
    }
    const auto cls = find_key(*obj, "Class");
    if (!cls) throw MalformedResponse("reply has no 'Class' key");
    if (!cls->is_string()) throw MalformedResponse("'Class' is not a string");
    const std::string word = to_lower(trim(cls->get<std::string>()));
    if (word == "better") return Prediction::of_label(1);
    if (word == "worse") return Prediction::of_label(0);
    throw MalformedResponse("unrecognized class word: " + word);
}

}  // namespace laea
