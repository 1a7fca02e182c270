import { beforeAll, describe, expect, test } from "vitest";
import { join } from "node:path";

import { GOLDEN_CORPUS, REPO_ROOT, loadCorpus, LoadedImage } from "./helpers.js";

let image: LoadedImage;

beforeAll(() => {
  image = loadCorpus(GOLDEN_CORPUS);
});

describe("image loading", () => {
  test("adds exactly one global: Class", () => {
    expect(image.newGlobals).toEqual(["Class"]);
  });

  test("Class returns the same meta-object per canonical name", () => {
    expect(
      image.run(
        'Class("UI.Component.Rectangle") === Class("UI.Component.Rectangle")',
      ),
    ).toBe(true);
  });

  test("unknown class names throw", () => {
    expect(() => image.run('Class("No.Such.Thing")')).toThrowError(
      /JSC: unknown class No\.Such\.Thing/,
    );
  });

  test("meta carries its canonical name", () => {
    expect(image.run('Class("UI.Component.Rectangle").name')).toBe(
      "UI.Component.Rectangle",
    );
  });
});

describe("instantiation", () => {
  test("Rectangle.create(10,10).getArea() is 100", () => {
    expect(
      image.run('Class("UI.Component.Rectangle").create(10, 10).getArea()'),
    ).toBe(100);
  });

  test("PositionedRectangle mixes in Rectangle's slots and methods", () => {
    const result = image.run(`
      (function () {
        var p = Class("UI.Component.PositionedRectangle").create(1, 2, 3, 4);
        return [p.getX(), p.getY(), p.getArea()];
      })()
    `);
    expect(result).toEqual([1, 2, 12]);
  });

  test("accessors store through __slot_* keys on the instance", () => {
    const result = image.run(`
      (function () {
        var r = Class("UI.Component.Rectangle").create(3, 4);
        return [
          Object.prototype.hasOwnProperty.call(r, "__slot_height"),
          r.__slot_height,
          (r.setHeight(9), r.__slot_height)
        ];
      })()
    `);
    expect(result).toEqual([true, 4, 9]);
  });

  test("init applies the ctor to an existing instance", () => {
    const result = image.run(`
      (function () {
        var r = Class("UI.Component.Rectangle").create(2, 3);
        Class("UI.Component.Rectangle").init(r, 10, 10);
        return r.getArea();
      })()
    `);
    expect(result).toBe(100);
  });

  test("double init overwrites slots deterministically", () => {
    const result = image.run(`
      (function () {
        var meta = Class("UI.Component.Rectangle");
        var r = meta.create(1, 1);
        meta.init(r, 5, 6);
        meta.init(r, 7, 8);
        return [r.getWidth(), r.getHeight()];
      })()
    `);
    expect(result).toEqual([7, 8]);
  });

  test("create on a ctor-less class applies defaults only", () => {
    const result = image.run(`
      (function () {
        Class.define("T.Plain", {
          kind: "class",
          supers: [],
          slots: [
            { name: "v", getter: "getV", setter: "setV", hasDefault: true,
              default: function () { return 7; } },
            { name: "w", getter: "getW", setter: "setW", hasDefault: false }
          ],
          methods: {},
          statics: {},
          ctor: null
        });
        var plain = Class("T.Plain").create();
        return [plain.getV(), typeof plain.getW()];
      })()
    `);
    expect(result).toEqual([7, "undefined"]);
  });

  test("init on a ctor-less class leaves the instance unchanged", () => {
    const result = image.run(`
      (function () {
        var obj = { marker: 1 };
        var back = Class("T.Plain").init(obj, 1, 2, 3);
        return back === obj && obj.marker === 1
          && Object.getOwnPropertyNames(obj).length === 1;
      })()
    `);
    expect(result).toBe(true);
  });
});

describe("respondsTo", () => {
  test("true for methods and generated accessors", () => {
    expect(
      image.run('Class("UI.Component.Rectangle").respondsTo("getArea")'),
    ).toBe(true);
    expect(
      image.run('Class("UI.Component.Rectangle").respondsTo("setWidth")'),
    ).toBe(true);
  });

  test("false for absent names", () => {
    expect(image.run('Class("UI.Component.Rectangle").respondsTo("nope")')).toBe(
      false,
    );
  });
});

describe("undeclared writes in bodies", () => {
  test("are a compile-time concern; loading still adds only Class", () => {
    // Registrations sit outside the strict kernel wrapper (the image
    // layout is pinned), so the classic `global = 1` body is legal sloppy
    // ES5 at runtime; the compiler's lint is what flags it.  Loading the
    // image must still introduce exactly one global.
    const leaky = loadCorpus(join(REPO_ROOT, "tests", "corpus", "lint"));
    expect(leaky.newGlobals).toEqual(["Class"]);
    expect(() => leaky.run('Class("Lint.Foo").create()')).not.toThrow();
  });
});
