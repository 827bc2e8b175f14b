#include "ctxpass/llm_client.hpp"

#include <json.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <csignal>
#include <cstring>
#include <thread>

#include "ctxpass/errors.hpp"
#include "ctxpass/text.hpp"

namespace ctxpass {

MockClient::MockClient(std::map<std::string, std::string> replies, std::string name)
    : replies_(std::move(replies)), name_(std::move(name)) {}

std::string MockClient::digest(const std::string& prompt) { return hex64(fnv1a64(prompt)); }

MockClient MockClient::from_file(const std::string& path, std::string name) {
  return from_json(read_file(path), std::move(name));
}

MockClient MockClient::from_json(const std::string& json_text, std::string name) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what(), e.byte);
  }
  if (!doc.is_object()) throw DataError("mock reply fixture must be a JSON object");
  std::map<std::string, std::string> replies;
  for (const auto& [key, value] : doc.items()) {
    if (!value.is_string()) throw DataError("mock reply for key " + key + " must be a string");
    replies[key] = value.get<std::string>();
  }
  return MockClient(std::move(replies), std::move(name));
}

std::string MockClient::send(const std::string& prompt) {
  std::string key = digest(prompt);
  if (auto it = replies_.find(key); it != replies_.end()) return it->second;
  if (auto it = replies_.find("*"); it != replies_.end()) return it->second;
  throw ClientError("mock client " + name_ + " has no reply for prompt digest " + key);
}

CommandClient::CommandClient(std::string command) : command_(std::move(command)) {
  if (command_.empty())
    throw UsageError("command client requires a non-empty command (set CTXPASS_LLM_CMD)");
}

namespace {

struct Pipe {
  int fds[2] = {-1, -1};
  Pipe() {
    if (pipe(fds) != 0) throw ClientError("pipe failed: " + std::string(std::strerror(errno)));
  }
  ~Pipe() {
    close_read();
    close_write();
  }
  void close_read() {
    if (fds[0] >= 0) { ::close(fds[0]); fds[0] = -1; }
  }
  void close_write() {
    if (fds[1] >= 0) { ::close(fds[1]); fds[1] = -1; }
  }
};

void write_all(int fd, const std::string& data) {
  std::size_t off = 0;
  while (off < data.size()) {
    ssize_t n = ::write(fd, data.data() + off, data.size() - off);
    if (n < 0) {
      if (errno == EINTR) continue;
      return;  // child closed its input early; reply read decides success
    }
    off += static_cast<std::size_t>(n);
  }
}

}  // namespace

std::string CommandClient::send(const std::string& prompt) {
  Pipe to_child;
  Pipe from_child;
  pid_t pid = fork();
  if (pid < 0) throw ClientError("fork failed: " + std::string(std::strerror(errno)));
  if (pid == 0) {
    dup2(to_child.fds[0], STDIN_FILENO);
    dup2(from_child.fds[1], STDOUT_FILENO);
    to_child.close_read();
    to_child.close_write();
    from_child.close_read();
    from_child.close_write();
    execl("/bin/sh", "sh", "-c", command_.c_str(), static_cast<char*>(nullptr));
    _exit(127);
  }
  to_child.close_read();
  from_child.close_write();

  // The writer runs on its own thread so a child that floods its output
  // before draining its input cannot deadlock us.
  int write_fd = to_child.fds[1];
  std::signal(SIGPIPE, SIG_IGN);
  std::thread writer([&] {
    write_all(write_fd, prompt);
    to_child.close_write();
  });

  std::string reply;
  char buf[4096];
  while (true) {
    ssize_t n = ::read(from_child.fds[0], buf, sizeof(buf));
    if (n < 0) {
      if (errno == EINTR) continue;
      break;
    }
    if (n == 0) break;
    reply.append(buf, static_cast<std::size_t>(n));
  }
  writer.join();

  int status = 0;
  while (waitpid(pid, &status, 0) < 0 && errno == EINTR) {}
  if (WIFSIGNALED(status))
    throw ClientError("llm command terminated by signal " + std::to_string(WTERMSIG(status)));
  if (!WIFEXITED(status) || WEXITSTATUS(status) != 0)
    throw ClientError("llm command exited with status " +
                      std::to_string(WIFEXITED(status) ? WEXITSTATUS(status) : -1));
  return reply;
}

}  // namespace ctxpass
