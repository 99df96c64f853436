#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "memgym/policy.hpp"
#include "memgym/strategy.hpp"

namespace memgym {

struct EndpointConfig {
  std::string url;    // e.g. http://127.0.0.1:8700/v1/chat
  std::string model;
  int timeout_ms = 30000;
  int retries = 2;
  std::string api_key_env = "MEMGYM_API_KEY";  // credentials come from the environment only
};

class TransportError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Chat-completion style exchange: the request carries a model identifier and
// the filtered message list; the response carries one assistant message,
// optionally with tool calls. A /score variant sends a linearized triple and
// receives a real in [0,1].
class RemoteChatClient {
 public:
  explicit RemoteChatClient(EndpointConfig config);
  ~RemoteChatClient();

  RemoteChatClient(const RemoteChatClient&) = delete;
  RemoteChatClient& operator=(const RemoteChatClient&) = delete;

  // POST {model, messages} -> {message}. Throws TransportError after retries.
  Message chat(const std::vector<Message>& messages);

  // POST {model, prompt} -> {score}. Throws TransportError.
  double score(const std::string& prompt);

  const EndpointConfig& config() const { return config_; }

 private:
  struct Impl;
  EndpointConfig config_;
  std::unique_ptr<Impl> impl_;
};

class RemotePolicy : public Policy {
 public:
  RemotePolicy(EndpointConfig config, std::string id);
  Action act(const std::vector<Message>& context) override;
  std::string id() const override { return id_; }

 private:
  RemoteChatClient client_;
  std::string id_;
};

// Sends (instruction, prefix) and expects free text, or a JSON object with
// all 17 state fields for the structured form; missing fields surface as
// SummarizerError so strategies fail open.
class RemoteSummarizer : public Summarizer {
 public:
  explicit RemoteSummarizer(EndpointConfig config);
  std::string summarize(const std::string& instruction,
                        const std::vector<Message>& prefix) override;
  StructuredState summarize_structured(const std::string& instruction,
                                       const std::vector<Message>& prefix) override;

 private:
  RemoteChatClient client_;
};

}  // namespace memgym
