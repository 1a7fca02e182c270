import { execFileSync } from "node:child_process";
import { mkdtempSync, readFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { dirname, join, resolve } from "node:path";
import { fileURLToPath } from "node:url";
import vm from "node:vm";

const HERE = dirname(fileURLToPath(import.meta.url));

export const REPO_ROOT = resolve(HERE, "..", "..");
export const FIXTURES = join(HERE, "fixtures");
export const DEMO_CORPUS = join(REPO_ROOT, "tests", "corpus", "demo");
export const GOLDEN_CORPUS = join(REPO_ROOT, "tests", "corpus", "golden");
export const KERNEL_SOURCE = join(HERE, "..", "src", "kernel.js");

export interface BuiltImage {
  text: string;
  manifest: string | null;
}

/** Compile a corpus through the jscc CLI (the compiler's public surface). */
export function buildImage(root: string, extraArgs: string[] = []): BuiltImage {
  const out = join(mkdtempSync(join(tmpdir(), "jsc-image-")), "image.js");
  execFileSync(
    "python3",
    ["-m", "jscc", "build", "--root", root, "--out", out, ...extraArgs],
    { cwd: REPO_ROOT, stdio: ["ignore", "pipe", "pipe"] },
  );
  const manifestPath = out + ".manifest";
  let manifest: string | null = null;
  if (extraArgs.includes("--manifest")) {
    manifest = readFileSync(manifestPath, "utf8");
  }
  return { text: readFileSync(out, "utf8"), manifest };
}

export interface LoadedImage {
  newGlobals: string[];
  /** Evaluate an expression or statements inside the image's realm. */
  run(code: string): unknown;
}

/** Load an image into a fresh realm and report which globals it added. */
export function loadImage(text: string): LoadedImage {
  const context = vm.createContext({});
  const names = "Object.getOwnPropertyNames(globalThis)";
  const before = vm.runInContext(names, context) as string[];
  vm.runInContext(text, context, { filename: "image.js" });
  const after = vm.runInContext(names, context) as string[];
  return {
    newGlobals: after.filter((name) => !before.includes(name)),
    run: (code: string) => vm.runInContext(code, context, { filename: "probe.js" }),
  };
}

export function loadCorpus(root: string): LoadedImage {
  return loadImage(buildImage(root).text);
}
