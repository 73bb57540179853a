#include "report.hpp"

#include <iostream>

#include "bentcat/text_format.hpp"
#include "bentcat/transforms.hpp"

namespace bentcat::cli {

Report::Report(std::string command, std::vector<std::string> args, const CommonOptions& options)
    : command_(std::move(command)), args_(std::move(args)), options_(options) {}

void Report::add_input(const std::string& source, const std::string& input_digest) {
  inputs_.push_back({{"source", source}, {"digest", input_digest}});
}

int Report::finish() {
  Json out;
  out["schema"] = kSchema;
  out["command"] = command_;
  out["arguments"] = args_;
  if (options_.seed) out["seed"] = *options_.seed;
  out["inputs"] = inputs_;
  for (auto& [key, value] : body_.items()) out[key] = value;
  out["budget"] = {{"limit", options_.budget}, {"nodes_used", nodes_used_}, {"exhausted", exhausted_}};
  out["disagreements"] = disagreements_;
  const bool ok = disagreements_ == 0 && !exhausted_;
  out["status"] = ok ? "ok" : (disagreements_ != 0 ? "disagreement" : "budget-exhausted");
  if (options_.timing) {
    const auto elapsed = std::chrono::steady_clock::now() - start_;
    out["timing_ms"] = std::chrono::duration<double, std::milli>(elapsed).count();
  }
  const auto text = out.dump(2) + "\n";
  std::cout << text;
  if (!options_.json_out.empty()) write_file(options_.json_out, text);
  return ok ? 0 : 1;
}

Json subspace_json(const Subspace& v) {
  return {{"dim", v.dim()}, {"basis", points_json(v.basis())}};
}

Json spectrum_json(const BooleanFunction& f) {
  const auto cls = classify_spectrum(walsh_transform(f));
  return {{"class", to_string(cls.tag)}, {"abs_values", cls.value_set}};
}

Json class_verdict_json(const ClassVerdict& v) {
  Json out{{"membership", to_string(v.membership)}};
  out["witness"] = v.witness ? subspace_json(*v.witness) : Json(nullptr);
  out["nodes_explored"] = v.nodes_explored;
  out["budget"] = v.budget;
  out["reason"] = v.reason;
  return out;
}

Json concat_verdict_json(const ConcatVerdict& v, const std::string& construction,
                         std::span<const BooleanFunction> pieces) {
  Json digests = Json::array();
  for (const auto& f : pieces) digests.push_back(function_json(f)["digest"]);
  Json out{{"construction", construction},
           {"pieces", std::move(digests)},
           {"verdict", v.inside_mm ? "Inside" : "Outside"},
           {"condition", v.condition}};
  if (v.piece_subspace) out["piece_subspace"] = subspace_json(*v.piece_subspace);
  if (v.witness_subspace) out["witness_subspace"] = subspace_json(*v.witness_subspace);
  if (!v.witness_vectors.empty()) out["witness_vectors"] = points_json(v.witness_vectors);
  out["cross_check"] = to_string(v.cross_check);
  out["nodes_explored"] = v.nodes_explored;
  return out;
}

Json certificate_json(const BooleanFunction& f, int k, const ClassVerdict& v) {
  Json out{{"function", function_json(f)}, {"k", k}, {"verdict", to_string(v.membership)}};
  if (v.witness) out["witness"] = points_json(v.witness->basis());
  out["nodes_explored"] = v.nodes_explored;
  out["budget"] = v.budget;
  return out;
}

Json function_json(const BooleanFunction& f) {
  Json out{{"n", f.n_vars()}};
  if (f.n_vars() >= 2) {
    const auto hex = to_hex(f);
    out["table"] = hex;
    out["digest"] = digest(hex);
  } else {
    out["bits"] = std::to_string(f.words()[0]);
  }
  return out;
}

}  // namespace bentcat::cli
