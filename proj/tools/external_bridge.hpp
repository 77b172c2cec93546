// Child-process invariant bridge: diagrams go to the child as one JSON line
// each, ring elements come back one JSON line each.
#pragma once

#include "skein/invariants.hpp"
#include "skein/serde.hpp"

#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <string>

namespace skein {

class ExternalInvariant {
public:
  explicit ExternalInvariant(const std::string& command, int timeout_ms = 30000)
      : timeout_ms_(timeout_ms) {
    // a crashed child must surface as an evaluation error, not kill us
    signal(SIGPIPE, SIG_IGN);
    int to_child[2], from_child[2];
    if (pipe(to_child) != 0 || pipe(from_child) != 0)
      throw SkeinError("bridge_spawn", "pipe failed", std::strerror(errno));
    pid_ = fork();
    if (pid_ < 0) throw SkeinError("bridge_spawn", "fork failed", std::strerror(errno));
    if (pid_ == 0) {
      dup2(to_child[0], STDIN_FILENO);
      dup2(from_child[1], STDOUT_FILENO);
      close(to_child[0]);
      close(to_child[1]);
      close(from_child[0]);
      close(from_child[1]);
      execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char*>(nullptr));
      _exit(127);
    }
    close(to_child[0]);
    close(from_child[1]);
    in_fd_ = to_child[1];
    out_fd_ = from_child[0];
  }

  ExternalInvariant(const ExternalInvariant&) = delete;
  ExternalInvariant& operator=(const ExternalInvariant&) = delete;

  ~ExternalInvariant() {
    if (in_fd_ >= 0) close(in_fd_);
    if (out_fd_ >= 0) close(out_fd_);
    if (pid_ > 0) {
      kill(pid_, SIGTERM);
      int status = 0;
      waitpid(pid_, &status, 0);
    }
  }

  RingElem eval(const Diagram& d) {
    const std::string line = serialize(d) + "\n";
    size_t off = 0;
    while (off < line.size()) {
      const ssize_t n = write(in_fd_, line.data() + off, line.size() - off);
      if (n <= 0)
        throw SkeinError("bridge_io", "child stopped reading", std::strerror(errno));
      off += static_cast<size_t>(n);
    }
    std::string reply = read_line();
    try {
      return ring_from_json(Json::parse(reply));
    } catch (const std::exception& e) {
      throw SkeinError("bridge_protocol", "malformed child output", reply);
    }
  }

  /// Wrap as a named singular invariant for the checkers.
  SingularInvariant as_invariant(const std::string& label) {
    SingularInvariant f;
    f.name = label;
    f.eval = [this](const Diagram& d) { return eval(d); };
    return f;
  }

private:
  std::string read_line() {
    std::string line;
    while (true) {
      const size_t nl = buffer_.find('\n');
      if (nl != std::string::npos) {
        line = buffer_.substr(0, nl);
        buffer_.erase(0, nl + 1);
        return line;
      }
      struct pollfd pfd {
        out_fd_, POLLIN, 0
      };
      const int pr = poll(&pfd, 1, timeout_ms_);
      if (pr == 0) throw SkeinError("bridge_timeout", "child did not answer in time");
      if (pr < 0) throw SkeinError("bridge_io", "poll failed", std::strerror(errno));
      char chunk[4096];
      const ssize_t n = read(out_fd_, chunk, sizeof chunk);
      if (n == 0)
        throw SkeinError("bridge_exit", "child exited mid-stream",
                         "partial: " + buffer_);
      if (n < 0) throw SkeinError("bridge_io", "read failed", std::strerror(errno));
      buffer_.append(chunk, static_cast<size_t>(n));
    }
  }

  int in_fd_ = -1;
  int out_fd_ = -1;
  pid_t pid_ = -1;
  int timeout_ms_;
  std::string buffer_;
};

}  // namespace skein
