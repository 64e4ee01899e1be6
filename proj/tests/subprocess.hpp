#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>

#include <sys/wait.h>

/* run a shell command, capture stdout, return the exit code */
struct CommandResult {
    int exit_code;
    std::string output;
};

inline CommandResult run_command(const std::string& cmd)
{
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr)
        throw std::runtime_error("popen failed: " + cmd);
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0)
        out.append(buf, got);
    const int status = pclose(pipe);
    const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}
