#pragma once

#include <map>
#include <string>

namespace ctxpass {

// Synchronous text-in/text-out contract over any model vendor.
class LLMClient {
 public:
  virtual ~LLMClient() = default;
  virtual std::string send(const std::string& prompt) = 0;
  virtual const std::string& name() const = 0;
};

// Scripted replies keyed by prompt digest (fnv1a64 hex). The "*" key, when
// present, answers any prompt without its own entry.
class MockClient : public LLMClient {
 public:
  // Fixture file: JSON object of digest (or "*") to reply text.
  static MockClient from_file(const std::string& path, std::string name);
  static MockClient from_json(const std::string& json_text, std::string name);

  // Throws ClientError naming the missing digest so fixtures can be extended.
  std::string send(const std::string& prompt) override;
  const std::string& name() const override { return name_; }

  static std::string digest(const std::string& prompt);

 private:
  MockClient(std::map<std::string, std::string> replies, std::string name);

  std::map<std::string, std::string> replies_;
  std::string name_;
};

// Bridges to an external command (the CTXPASS_LLM_CMD environment variable):
// the prompt goes to the child's standard input, the reply is its standard
// output. Nonzero exit or a signal raises ClientError.
class CommandClient : public LLMClient {
 public:
  explicit CommandClient(std::string command);

  std::string send(const std::string& prompt) override;
  const std::string& name() const override { return name_; }

 private:
  std::string command_;
  std::string name_ = "command";
};

}  // namespace ctxpass
