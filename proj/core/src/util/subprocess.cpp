#include "hlspipe/util/subprocess.hpp"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <chrono>
#include <cstring>

namespace hlspipe::util {

namespace {

void set_nonblock(int fd) {
    int flags = fcntl(fd, F_GETFL, 0);
    fcntl(fd, F_SETFL, flags | O_NONBLOCK);
}

}  // namespace

RunResult run_process(const std::vector<std::string>& argv,
                      const std::string& stdin_data,
                      int timeout_seconds,
                      const std::filesystem::path& cwd) {
    if (argv.empty()) throw SpawnError("empty argv");

    int in_pipe[2], out_pipe[2], err_pipe[2];
    if (pipe(in_pipe) != 0 || pipe(out_pipe) != 0 || pipe(err_pipe) != 0) {
        throw SpawnError("pipe() failed");
    }

    pid_t pid = fork();
    if (pid < 0) throw SpawnError("fork() failed");

    if (pid == 0) {
        dup2(in_pipe[0], STDIN_FILENO);
        dup2(out_pipe[1], STDOUT_FILENO);
        dup2(err_pipe[1], STDERR_FILENO);
        close(in_pipe[0]); close(in_pipe[1]);
        close(out_pipe[0]); close(out_pipe[1]);
        close(err_pipe[0]); close(err_pipe[1]);
        if (!cwd.empty() && chdir(cwd.c_str()) != 0) _exit(126);
        std::vector<char*> cargv;
        cargv.reserve(argv.size() + 1);
        for (const auto& a : argv) cargv.push_back(const_cast<char*>(a.c_str()));
        cargv.push_back(nullptr);
        execvp(cargv[0], cargv.data());
        _exit(127);  // exec failed
    }

    close(in_pipe[0]);
    close(out_pipe[1]);
    close(err_pipe[1]);
    set_nonblock(in_pipe[1]);
    set_nonblock(out_pipe[0]);
    set_nonblock(err_pipe[0]);

    RunResult res;
    size_t written = 0;
    bool stdin_open = true;
    if (stdin_data.empty()) {
        close(in_pipe[1]);
        stdin_open = false;
    }

    auto deadline = std::chrono::steady_clock::now() +
                    std::chrono::seconds(timeout_seconds > 0 ? timeout_seconds : 3600);

    int out_fd = out_pipe[0], err_fd = err_pipe[0];
    char buf[8192];
    while (out_fd >= 0 || err_fd >= 0 || stdin_open) {
        auto now = std::chrono::steady_clock::now();
        if (now >= deadline) {
            res.timed_out = true;
            kill(pid, SIGKILL);
            break;
        }
        int wait_ms = int(std::chrono::duration_cast<std::chrono::milliseconds>(
                              deadline - now).count());
        wait_ms = std::min(wait_ms, 200);

        pollfd fds[3];
        nfds_t nfds = 0;
        int out_idx = -1, err_idx = -1, in_idx = -1;
        if (out_fd >= 0) { fds[nfds] = {out_fd, POLLIN, 0}; out_idx = int(nfds++); }
        if (err_fd >= 0) { fds[nfds] = {err_fd, POLLIN, 0}; err_idx = int(nfds++); }
        if (stdin_open) { fds[nfds] = {in_pipe[1], POLLOUT, 0}; in_idx = int(nfds++); }
        if (nfds == 0) break;

        int rc = poll(fds, nfds, wait_ms);
        if (rc < 0) {
            if (errno == EINTR) continue;
            break;
        }
        if (rc == 0) continue;

        if (out_idx >= 0 && (fds[out_idx].revents & (POLLIN | POLLHUP))) {
            ssize_t n = read(out_fd, buf, sizeof(buf));
            if (n > 0) res.out.append(buf, size_t(n));
            else if (n == 0 || (n < 0 && errno != EAGAIN)) { close(out_fd); out_fd = -1; }
        }
        if (err_idx >= 0 && (fds[err_idx].revents & (POLLIN | POLLHUP))) {
            ssize_t n = read(err_fd, buf, sizeof(buf));
            if (n > 0) res.err.append(buf, size_t(n));
            else if (n == 0 || (n < 0 && errno != EAGAIN)) { close(err_fd); err_fd = -1; }
        }
        if (in_idx >= 0 && (fds[in_idx].revents & (POLLOUT | POLLERR | POLLHUP))) {
            if (fds[in_idx].revents & (POLLERR | POLLHUP)) {
                close(in_pipe[1]);
                stdin_open = false;
            } else {
                ssize_t n = write(in_pipe[1], stdin_data.data() + written,
                                  stdin_data.size() - written);
                if (n > 0) written += size_t(n);
                if (written >= stdin_data.size() || (n < 0 && errno != EAGAIN)) {
                    close(in_pipe[1]);
                    stdin_open = false;
                }
            }
        }
    }
    if (out_fd >= 0) close(out_fd);
    if (err_fd >= 0) close(err_fd);
    if (stdin_open) close(in_pipe[1]);

    int status = 0;
    if (res.timed_out) {
        waitpid(pid, &status, 0);
        res.exit_code = -1;
    } else {
        waitpid(pid, &status, 0);
        if (WIFEXITED(status)) {
            res.exit_code = WEXITSTATUS(status);
        } else if (WIFSIGNALED(status)) {
            res.signaled = true;
            res.exit_code = 128 + WTERMSIG(status);
        }
    }
    return res;
}

}  // namespace hlspipe::util
