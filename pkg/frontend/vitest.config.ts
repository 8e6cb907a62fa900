import { defineConfig } from "vitest/config";

export default defineConfig({
  test: {
    globals: true,
    environment: "jsdom",
    include: ["tests/**/*.test.ts"],
    testTimeout: 60_000,
    hookTimeout: 60_000,
    // the e2e test spawns a real server; keep runs serial and quiet
    pool: "forks",
    poolOptions: { forks: { singleFork: true } },
  },
});
