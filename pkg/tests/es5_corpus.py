"""Hand-labelled ES5 snippet corpus shared by the parser tests.

Every entry in VALID must parse; every entry in INVALID must be rejected
with the given diagnostic code.  Labels were derived from the ES5 grammar
by hand and are frozen here.
"""

# fmt: off
VALID = [
    # functions and parameters
    "function (){}",
    "function (a){}",
    "function (a, b, c){ return a + b + c; }",
    "function named(a){ return named; }",
    "function (){ return this.height * this.width; }",
    "function (){ function inner(x){ return x; } return inner(1); }",
    "function (){ var f = function g(){ return g; }; return f; }",

    # var statements
    "function (){ var x; }",
    "function (){ var x = 1; }",
    "function (){ var x = 1, y = 2, z; }",
    "function (){ var x = 1 + 2 * 3; }",
    "function (){ var x = (1 + 2) * 3; }",

    # empty / block / expression statements
    "function (){ ; }",
    "function (){ ;;; }",
    "function (){ { } }",
    "function (){ { var a = 1; { a = 2; } } }",
    "function (){ f(); }",
    "function (){ a.b(); }",
    "function (x){ x; }",

    # if / else
    "function (a){ if (a) f(); }",
    "function (a){ if (a) f(); else g(); }",
    "function (a){ if (a) { f(); } else { g(); } }",
    "function (a, b){ if (a) if (b) f(); else g(); }",
    "function (a){ if (a) ; }",

    # loops
    "function (a){ while (a) a = a - 1; }",
    "function (a){ while (a) { a = a - 1; } }",
    "function (a){ do a = a - 1; while (a); }",
    "function (a){ do { a = a - 1; } while (a); }",
    "function (a){ do { } while (a) }",
    "function (a){ for (var i = 0; i < a; i = i + 1) {} }",
    "function (a){ for (var i=0;i<a;i++){} }",
    "function (){ for (;;) { break; } }",
    "function (a){ for (var i = 0, j = a; i < j; i++, j--) {} }",
    "function (a){ for (i = 0; ; i++) { if (i > a) break; } }",
    "function (a){ for (; a; ) a--; }",
    "function (o){ for (var k in o) f(k); }",
    "function (o){ for (k in o) f(k); }",
    "function (o){ for (o.k in o) f(o.k); }",
    "function (o){ for (o[0] in o) f(); }",
    "function (o){ for (var k = 'a' in o) f(k); }",

    # break / continue / labels
    "function (a){ while (a) { break; } }",
    "function (a){ while (a) { continue; } }",
    "function (a){ outer: while (a) { inner: while (a) { break outer; } } }",
    "function (a){ loop: while (a) { continue loop; } }",
    "function (a){ lab: { f(); } }",
    "function (a){ lab1: lab2: while (a) break lab1; }",

    # return / throw
    "function (){ return; }",
    "function (){ return 1; }",
    "function (){ return\n1; }",
    "function (a){ throw a; }",
    "function (a){ throw new Error('boom'); }",

    # switch
    "function (a){ switch (a) {} }",
    "function (a){ switch (a) { case 1: f(); } }",
    "function (a){ switch (a) { case 1: case 2: f(); break; default: g(); } }",
    "function (a){ switch (a) { default: f(); case 1: g(); } }",

    # try / catch / finally
    "function (){ try { f(); } catch (e) { g(e); } }",
    "function (){ try { f(); } finally { g(); } }",
    "function (){ try { f(); } catch (e) { g(e); } finally { h(); } }",
    "function (){ try { } catch (e) { throw e; } }",

    # debugger
    "function (){ debugger; }",

    # assignment operators
    "function (a){ a = 1; }",
    "function (a){ a += 1; }",
    "function (a){ a -= 1; }",
    "function (a){ a *= 2; }",
    "function (a){ a /= 2; }",
    "function (a){ a %= 2; }",
    "function (a){ a <<= 1; }",
    "function (a){ a >>= 1; }",
    "function (a){ a >>>= 1; }",
    "function (a){ a &= 1; }",
    "function (a){ a |= 1; }",
    "function (a){ a ^= 1; }",
    "function (a, b, c){ a = b = c; }",
    "function (o){ o.x = 1; }",
    "function (o){ o['x'] = 1; }",
    "function (o){ o.x.y = 1; }",

    # conditional and logical
    "function (a, b, c){ return a ? b : c; }",
    "function (a, b, c, d, e){ return a ? b ? c : d : e; }",
    "function (a, b){ return a || b; }",
    "function (a, b){ return a && b; }",
    "function (a, b, c){ return a || b && c; }",
    "function (a, b){ return a ? b : a ? b : a; }",

    # binary and unary operators
    "function (a, b){ return a | b ^ a & b; }",
    "function (a, b){ return a == b != a; }",
    "function (a, b){ return a === b !== a; }",
    "function (a, b){ return a < b <= a > b >= a; }",
    "function (a, b){ return a << b >> a >>> b; }",
    "function (a, b){ return a + b - a; }",
    "function (a, b){ return a * b / a % b; }",
    "function (a, b){ return a + b * a; }",
    "function (a, b){ return -a + +b; }",
    "function (a){ return !a; }",
    "function (a){ return ~a; }",
    "function (a){ return typeof a; }",
    "function (a){ return void a; }",
    "function (o){ return delete o.x; }",
    "function (o){ return delete o['x']; }",
    "function (a){ return typeof typeof a; }",
    "function (a, b){ return a in b; }",
    "function (a, b){ return a instanceof b; }",
    "function (a){ return -(-a); }",

    # updates
    "function (a){ a++; }",
    "function (a){ a--; }",
    "function (a){ ++a; }",
    "function (a){ --a; }",
    "function (o){ o.x++; }",
    "function (o){ ++o.x; }",
    "function (a, b){ return a++ + b; }",
    "function (a, b){ return a + ++b; }",

    # member access / calls / new
    "function (o){ return o.a.b.c; }",
    "function (o, i){ return o[i]; }",
    "function (o, i){ return o[i][i + 1]; }",
    "function (o){ return o.a[0].b; }",
    "function (f){ return f()(); }",
    "function (f){ return f(1)(2)(3); }",
    "function (o){ return o.f().g(); }",
    "function (f){ return f(1, 2, 3); }",
    "function (f, g){ return f(g()); }",
    "function (A){ return new A; }",
    "function (A){ return new A(); }",
    "function (A){ return new A(1, 2); }",
    "function (ns){ return new ns.inner.Type(1); }",
    "function (A){ return new new A()(); }",
    "function (A){ return new A()[0]; }",
    "function (A){ return new A().m(); }",
    "function (f){ return new (f())(); }",
    "function (o){ return o.delete; }",
    "function (o){ return o.new; }",
    "function (o){ return o.in; }",
    "function (o){ return o.class; }",

    # primaries and literals
    "function (){ return this; }",
    "function (){ return null; }",
    "function (){ return true; }",
    "function (){ return false; }",
    "function (){ return 0x1F; }",
    "function (){ return 1e10; }",
    "function (){ return .25; }",
    "function (){ return 'single'; }",
    'function (){ return "double"; }',
    "function (){ return 'a\\'b'; }",
    "function (){ return /ab+c/gi; }",
    "function (s){ return /x/.test(s); }",
    "function (a){ return (a); }",
    "function (a, b){ return (a, b); }",
    "function (a, b){ a = 1, b = 2; }",

    # arrays
    "function (){ return []; }",
    "function (){ return [1, 2, 3]; }",
    "function (){ return [1, ]; }",
    "function (){ return [, 1]; }",
    "function (){ return [1, , 2]; }",
    "function (){ return [[1], [2, [3]]]; }",
    "function (a){ return [a, a + 1, f(a)]; }",

    # objects
    "function (){ return {}; }",
    "function (){ return { a: 1 }; }",
    "function (){ return { a: 1, b: 2 }; }",
    "function (){ return { a: 1, }; }",
    "function (){ return { 'a b': 1, \"c\": 2 }; }",
    "function (){ return { 1: 'one', 2.5: 'half' }; }",
    "function (){ return { 'get': 1, 'set': 2 }; }",
    "function (){ return { get: 1, set: 2 }; }",
    "function (){ return { while: 1, var: 2, in: 3 }; }",
    "function (){ return { nested: { deep: { x: 1 } } }; }",
    "function (){ return { f: function (){ return 1; } }; }",

    # automatic semicolon insertion
    "function (){ var a = 1\nvar b = 2\nreturn a + b }",
    "function (a){ a = a + 1\nreturn a }",
    "function (){ return }",
    "function (a){ a\n++a }",
    "function (a){ a = 1 }",
    "function (a, b){ a = b\n(a).f() }",
    "function (a){ while (a) { a-- } }",
    "function (){ f()\ng() }",
    "function (a){ if (a) f()\nelse g() }",
    "function (){ do f(); while (0)\ng() }",

    # comments and whitespace
    "function (){ // line comment\n return 1; }",
    "function (){ /* block\ncomment */ return 1; }",
    "function (){ return 1; /* trailing */ }",
    "function (a){ return a /* inline */ + 1; }",

    # strict-future reserved words usable as plain identifiers in bodies
    "function (){ var package = 1; return package; }",
    "function (){ var static = 2; return static; }",
    "function (){ var protocol = 3; return protocol; }",
    "function (interface){ return interface; }",

    # bigger compositions
    "function (n){ var total = 0; for (var i = 0; i < n; i++) { total += i; } return total; }",
    "function (items){ var out = []; for (var i in items) { out[out.length] = items[i]; } return out; }",
    "function (a){ switch (typeof a) { case 'number': return a + 1; case 'string': return a; default: return null; } }",
    "function (x){ try { return risky(x); } catch (e) { return e && e.message ? e.message : 'unknown'; } }",
    "function (f, xs){ var acc = null; for (var i = 0; i < xs.length; i++) { acc = f(acc, xs[i]); } return acc; }",
    "function (o){ var copy = {}; for (var k in o) { copy[k] = o[k]; } return copy; }",
]

INVALID = [
    # with is forbidden outright
    ("function (o){ with (o) { f(); } }", "JSC-E020"),
    ("function (o){ if (o) with (o) f(); }", "JSC-E020"),
    # accessor properties are forbidden
    ("function (){ return { get x() { return 1; } }; }", "JSC-E022"),
    ("function (){ return { set x(v) { } }; }", "JSC-E022"),
    ("function (){ return { a: 1, get b() {} }; }", "JSC-E022"),
    # plain syntax errors
    ("function (", "JSC-E021"),
    ("function (){", "JSC-E021"),
    ("function (a b){}", "JSC-E021"),
    ("function (a,){}", "JSC-E021"),
    ("function (1){}", "JSC-E021"),
    ("function (a){ var ; }", "JSC-E021"),
    ("function (){ var 1x = 1; }", "JSC-E021"),
    ("function (){ var class = 1; }", "JSC-E021"),
    ("function (){ var if; }", "JSC-E021"),
    ("function (a){ a + ; }", "JSC-E021"),
    ("function (a){ a = ; }", "JSC-E021"),
    ("function (a){ (a; }", "JSC-E021"),
    ("function (a){ a[1; }", "JSC-E021"),
    ("function (o){ o. ; }", "JSC-E021"),
    ("function (f){ f(a,); }", "JSC-E021"),
    ("function (){ return { a: }; }", "JSC-E021"),
    ("function (){ return { a 1 }; }", "JSC-E021"),
    ("function (){ return [1 2]; }", "JSC-E021"),
    ("function (){ 1 = 2; }", "JSC-E021"),
    ("function (){ 1++; }", "JSC-E021"),
    ("function (){ ++1; }", "JSC-E021"),
    ("function (f){ f() = 1; }", "JSC-E021"),
    ("function (a, b){ (a, b) = 1; }", "JSC-E021"),
    ("function (a){ a ? 1; }", "JSC-E021"),
    ("function (a){ if a f(); }", "JSC-E021"),
    ("function (a){ if (a) else f(); }", "JSC-E021"),
    ("function (a){ while a {} }", "JSC-E021"),
    ("function (a){ do f(); }", "JSC-E021"),
    ("function (a){ for (a in) {} }", "JSC-E021"),
    ("function (a){ for (1 in a) {} }", "JSC-E021"),
    ("function (a, b){ for ((a, b) in a) {} }", "JSC-E021"),
    ("function (a){ for (var i = 0, j = 1 in a) {} }", "JSC-E021"),
    ("function (a){ for (a; a) {} }", "JSC-E021"),
    ("function (){ break; }", None),  # label-less break outside loop parses
    ("function (a){ switch (a) { default: f(); default: g(); } }", "JSC-E021"),
    ("function (a){ switch (a) { f(); } }", "JSC-E021"),
    ("function (){ try { f(); } }", "JSC-E021"),
    ("function (){ try f(); catch (e) {} }", "JSC-E021"),
    ("function (){ try {} catch {} }", "JSC-E021"),
    ("function (){ throw; }", "JSC-E021"),
    ("function (){ throw\n1; }", "JSC-E021"),
    ("function (){ return 1 2; }", "JSC-E021"),
    ("function (a){ a++ ++; }", "JSC-E021"),
    ("function (){ new; }", "JSC-E021"),
    ("function (){ return function; }", "JSC-E021"),
    ("function (){ class X {} }", "JSC-E021"),
    ("function (){ var x = { get y() {} }; }", "JSC-E022"),
    ("function (){ 'unterminated }", "JSC-E001"),
    ("function (){ /* }", "JSC-E001"),
    ("function (){ # }", "JSC-E015"),
]
# fmt: on

# `break;` outside a loop is grammatically fine in ES5 (it is a semantic
# early error, which this parser does not model); drop it from INVALID and
# keep it in VALID instead.
VALID = VALID + [src for src, code in INVALID if code is None]
INVALID = [(src, code) for src, code in INVALID if code is not None]
