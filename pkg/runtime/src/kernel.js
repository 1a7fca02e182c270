/*
 * JSC runtime kernel (image format 1).
 *
 * Keeps the registry of class/protocol definitions, builds meta-objects,
 * recomputes mixin members, verifies protocols and populates prototypes.
 * Definitions may be replaced at runtime with Class.define; affected
 * classes must then have classInit called so their prototype is rebuilt
 * (in place, so existing instances pick up the change).
 *
 * ES5 only: the emitted image must run in old engines.
 */

var Class = (function () {
  var registry = {};
  var registrationOrder = [];

  var RESERVED_META = {
    create: true, init: true, classInit: true, name: true, respondsTo: true,
    spec: true, prototypeObject: true, initialized: true,
    _initializing: true, _effective: true, _staticNames: true
  };

  function jscError(message) {
    return new Error("JSC: " + message);
  }

  function hasOwn(obj, name) {
    return Object.prototype.hasOwnProperty.call(obj, name);
  }

  function isArray(value) {
    return Object.prototype.toString.call(value) === "[object Array]";
  }

  function ownKeys(obj) {
    var keys = [];
    for (var key in obj) {
      if (hasOwn(obj, key)) { keys.push(key); }
    }
    return keys;
  }

  function createObject(proto) {
    function Shell() {}
    Shell.prototype = proto;
    return new Shell();
  }

  function makeGetter(key) {
    return function () { return this[key]; };
  }

  function makeSetter(key) {
    return function (value) { this[key] = value; };
  }

  function makeStub() {
    return function () {};
  }

  function Meta(name, spec) {
    this.name = name;
    this.spec = spec;
    this.prototypeObject = {};
    this.initialized = false;
    this._initializing = false;
    this._effective = null;
    this._staticNames = [];
  }

  Meta.prototype.classInit = function () {
    this.initialized = false;
    this._effective = null;
    initializeMeta(this);
    return this;
  };

  Meta.prototype.create = function () {
    initializeMeta(this);
    if (this.spec.kind !== "class") {
      throw jscError("cannot instantiate protocol " + this.name);
    }
    var instance = createObject(this.prototypeObject);
    var order = this._effective.slotOrder;
    var slots = this._effective.slots;
    for (var i = 0; i < order.length; i++) {
      var slot = slots[order[i]];
      var key = "__slot_" + slot.name;
      instance[key] = slot.hasDefault ? slot.defaultFn.call(instance) : undefined;
    }
    if (this.spec.ctor) {
      this.spec.ctor.apply(instance, arguments);
    }
    return instance;
  };

  Meta.prototype.init = function (instance) {
    if (this.spec.kind === "class" && this.spec.ctor) {
      this.spec.ctor.apply(instance, Array.prototype.slice.call(arguments, 1));
    }
    return instance;
  };

  Meta.prototype.respondsTo = function (methodName) {
    initializeMeta(this);
    return typeof this.prototypeObject[methodName] === "function";
  };

  function lookup(name) {
    if (!hasOwn(registry, name)) {
      throw jscError("unknown class " + name);
    }
    return registry[name];
  }

  function checkSpec(name, spec) {
    if (typeof name !== "string" || name === "") {
      throw jscError("define: name must be a non-empty string");
    }
    if (!spec || typeof spec !== "object") {
      throw jscError("define: spec of " + name + " must be an object");
    }
    if (spec.kind !== "class" && spec.kind !== "protocol") {
      throw jscError("define: bad kind for " + name);
    }
    if (spec.supers && !isArray(spec.supers)) {
      throw jscError("define: supers of " + name + " must be an array");
    }
    if (spec.ctor && typeof spec.ctor !== "function") {
      throw jscError("define: ctor of " + name + " must be a function");
    }
  }

  function define(name, spec) {
    checkSpec(name, spec);
    if (hasOwn(registry, name)) {
      var meta = registry[name];
      meta.spec = spec;
      meta.initialized = false;
      meta._effective = null;
    } else {
      registry[name] = new Meta(name, spec);
      registrationOrder.push(name);
    }
  }

  function collectProtocols(meta, acc) {
    if (indexOf(acc, meta.name) === -1) {
      acc.push(meta.name);
      var supers = meta.spec.supers || [];
      for (var i = 0; i < supers.length; i++) {
        collectProtocols(lookup(supers[i]), acc);
      }
    }
  }

  function indexOf(array, value) {
    for (var i = 0; i < array.length; i++) {
      if (array[i] === value) { return i; }
    }
    return -1;
  }

  function normalizeSlot(record) {
    return {
      name: record.name,
      getter: record.getter,
      setter: record.setter,
      hasDefault: !!record.hasDefault,
      defaultFn: record["default"]
    };
  }

  // Same precedence as the compiler: supers left to right, a later super
  // replaces an earlier one's member, own members win; replaced entries
  // keep their original position.
  function computeEffective(meta) {
    var eff = {
      methods: {}, methodOrder: [],
      slots: {}, slotOrder: [],
      protocols: []
    };

    function putMethod(name, fn) {
      if (!hasOwn(eff.methods, name)) { eff.methodOrder.push(name); }
      eff.methods[name] = fn;
    }

    function putSlot(slot) {
      if (!hasOwn(eff.slots, slot.name)) { eff.slotOrder.push(slot.name); }
      eff.slots[slot.name] = slot;
    }

    var spec = meta.spec;
    var supers = spec.supers || [];
    var i;
    for (i = 0; i < supers.length; i++) {
      var superMeta = lookup(supers[i]);
      initializeMeta(superMeta);
      if (superMeta.spec.kind === "protocol") {
        collectProtocols(superMeta, eff.protocols);
      } else {
        var sup = superMeta._effective;
        var j;
        for (j = 0; j < sup.methodOrder.length; j++) {
          putMethod(sup.methodOrder[j], sup.methods[sup.methodOrder[j]]);
        }
        for (j = 0; j < sup.slotOrder.length; j++) {
          putSlot(sup.slots[sup.slotOrder[j]]);
        }
        for (j = 0; j < sup.protocols.length; j++) {
          if (indexOf(eff.protocols, sup.protocols[j]) === -1) {
            eff.protocols.push(sup.protocols[j]);
          }
        }
      }
    }

    var methods = spec.methods || {};
    var methodNames = ownKeys(methods);
    for (i = 0; i < methodNames.length; i++) {
      putMethod(methodNames[i], methods[methodNames[i]]);
    }
    var slotRecords = spec.slots || [];
    for (i = 0; i < slotRecords.length; i++) {
      putSlot(normalizeSlot(slotRecords[i]));
    }
    return eff;
  }

  function initializeMeta(meta) {
    if (meta.initialized) { return; }
    if (meta._initializing) {
      throw jscError("cyclic inheritance involving " + meta.name);
    }
    meta._initializing = true;
    try {
      if (meta.spec.kind === "protocol") {
        var supers = meta.spec.supers || [];
        for (var s = 0; s < supers.length; s++) {
          var superMeta = lookup(supers[s]);
          if (superMeta.spec.kind !== "protocol") {
            throw jscError(
              "protocol " + meta.name + " cannot extend class " + superMeta.name
            );
          }
          initializeMeta(superMeta);
        }
        meta.initialized = true;
        return;
      }
      installClass(meta, computeEffective(meta));
      meta.initialized = true;
    } finally {
      meta._initializing = false;
    }
  }

  function installClass(meta, eff) {
    var present = {};
    var i;
    for (i = 0; i < eff.methodOrder.length; i++) {
      present[eff.methodOrder[i]] = true;
    }
    for (i = 0; i < eff.slotOrder.length; i++) {
      var slot = eff.slots[eff.slotOrder[i]];
      present[slot.getter] = true;
      present[slot.setter] = true;
    }

    // Runtime half of the protocol verification.
    var stubs = [];
    for (i = 0; i < eff.protocols.length; i++) {
      var protoName = eff.protocols[i];
      var required = lookup(protoName).spec.required || {};
      var names = ownKeys(required);
      for (var r = 0; r < names.length; r++) {
        var methodName = names[r];
        if (required[methodName]) {
          if (!hasOwn(present, methodName)) {
            throw jscError(
              "protocol " + protoName + " requires " + methodName +
              " in " + meta.name
            );
          }
        } else if (!hasOwn(present, methodName) &&
                   indexOf(stubs, methodName) === -1) {
          stubs.push(methodName);
        }
      }
    }

    // Repopulate the shared prototype in place so existing instances see
    // the new members.
    var proto = meta.prototypeObject;
    var stale = ownKeys(proto);
    for (i = 0; i < stale.length; i++) {
      delete proto[stale[i]];
    }
    for (i = 0; i < eff.methodOrder.length; i++) {
      proto[eff.methodOrder[i]] = eff.methods[eff.methodOrder[i]];
    }
    for (i = 0; i < eff.slotOrder.length; i++) {
      var slotRecord = eff.slots[eff.slotOrder[i]];
      var key = "__slot_" + slotRecord.name;
      proto[slotRecord.getter] = makeGetter(key);
      proto[slotRecord.setter] = makeSetter(key);
    }
    for (i = 0; i < stubs.length; i++) {
      proto[stubs[i]] = makeStub();
    }

    for (i = 0; i < meta._staticNames.length; i++) {
      delete meta[meta._staticNames[i]];
    }
    meta._staticNames = [];
    var statics = meta.spec.statics || {};
    var staticNames = ownKeys(statics);
    for (i = 0; i < staticNames.length; i++) {
      if (hasOwn(RESERVED_META, staticNames[i])) {
        throw jscError(
          "static " + staticNames[i] + " of " + meta.name +
          " collides with a meta-class member"
        );
      }
      meta[staticNames[i]] = statics[staticNames[i]];
      meta._staticNames.push(staticNames[i]);
    }
    meta._effective = eff;
  }

  function Class(name) {
    var meta = lookup(name);
    initializeMeta(meta);
    return meta;
  }

  Class.define = define;

  Class.initAll = function () {
    for (var i = 0; i < registrationOrder.length; i++) {
      initializeMeta(registry[registrationOrder[i]]);
    }
  };

  return Class;
})();
