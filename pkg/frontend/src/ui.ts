/**
 * Single-page annotation interface: staged pages for sentence input,
 * relation input, entity span selection, pair-relation mapping, and
 * output display. The engine session is the single source of truth;
 * every list below is recomputed from it on render, and the Output page
 * shows the canonical export verbatim. Engine errors never escape: they
 * surface as toasts.
 */

import { AnnotationSession } from "./engine";
import { AnnotationError } from "./errors";
import { exportSession } from "./serialize";
import { PendingSpan, rangeToSpan } from "./selection";

export type Page = "sentences" | "relations" | "annotate" | "output";

export interface SelectedPair {
  sentenceId: number;
  arg1: number;
  arg2: number;
}

export interface UiState {
  activePage: Page;
  selectedSentence: number | null;
  selectedPair: SelectedPair | null;
  relationFilter: string;
  toast: { message: string; level: "ok" | "error" } | null;
}

const TEMPLATE = `
<header>
  <h1>Relation Triplet Annotator</h1>
  <nav>
    <button type="button" data-page="sentences">1. Sentences</button>
    <button type="button" data-page="relations">2. Relations</button>
    <button type="button" data-page="annotate">3. Add Annotation</button>
    <button type="button" data-page="output">Output</button>
  </nav>
  <div id="toast" class="toast hidden"></div>
</header>

<section id="page-sentences" class="page">
  <p class="hint">Paste sentences below, one per line, then press Read.
     Select text in a listed sentence to mark an entity.</p>
  <textarea id="sentence-input" rows="6" placeholder="Sentence Input"></textarea>
  <button type="button" id="read-sentences">Read</button>
  <div class="columns">
    <ol id="sentence-list" class="grow"></ol>
    <aside>
      <button type="button" id="add-entity" class="add-entity hidden">Add as Entity</button>
      <h2>Entities</h2>
      <ul id="entity-list"></ul>
    </aside>
  </div>
</section>

<section id="page-relations" class="page hidden">
  <p class="hint">Paste the relation set, one relation per line, then press Read.</p>
  <textarea id="relation-input" rows="6" placeholder="Relation Input"></textarea>
  <button type="button" id="read-relations">Read</button>
  <input id="relation-search" type="search" placeholder="Search relations">
  <ul id="relation-list"></ul>
</section>

<section id="page-annotate" class="page hidden">
  <p class="hint">Pick an entity pair on the left, then mark its relations on the right.
     Changes are saved as you click.</p>
  <div class="columns">
    <ol id="pair-list" class="grow"></ol>
    <aside>
      <input id="annotate-search" type="search" placeholder="Search relations">
      <ul id="relation-checkboxes"></ul>
    </aside>
  </div>
</section>

<section id="page-output" class="page hidden">
  <button type="button" id="copy-output">Copy to clipboard</button>
  <pre id="output-json"></pre>
</section>
`;

export class App {
  readonly session = new AnnotationSession();
  readonly state: UiState = {
    activePage: "sentences",
    selectedSentence: null,
    selectedPair: null,
    relationFilter: "",
    toast: null,
  };

  private pending: PendingSpan | null = null;
  private readonly root: HTMLElement;
  private readonly doc: Document;

  constructor(root: HTMLElement) {
    this.root = root;
    this.doc = root.ownerDocument;
    root.innerHTML = TEMPLATE;
    this.bindEvents();
    this.bindUnloadGuard();
    this.renderAll();
  }

  // -- step 1: sentences ------------------------------------------------

  readSentences(): void {
    const field = this.element<HTMLTextAreaElement>("#sentence-input");
    try {
      this.session.ingestSentences(field.value);
      field.value = "";
      this.toast("Ok!!", "ok");
    } catch (error) {
      this.toastError(error);
    }
    this.renderAll();
  }

  // -- step 2: relation set ----------------------------------------------

  readRelations(): void {
    const field = this.element<HTMLTextAreaElement>("#relation-input");
    try {
      this.session.ingestLabels(field.value);
      field.value = "";
      this.toast("relation added", "ok");
    } catch (error) {
      this.toastError(error);
    }
    this.renderAll();
  }

  // -- step 3: entity annotation -------------------------------------------

  /** Inspect the current DOM selection; arm the Add-as-Entity button when valid. */
  captureSelection(): PendingSpan | null {
    const selection = this.doc.getSelection();
    this.pending =
      selection && selection.rangeCount > 0
        ? rangeToSpan(selection.getRangeAt(0), this.element("#sentence-list"))
        : null;
    this.renderAddEntityButton();
    return this.pending;
  }

  addPendingEntity(): number | null {
    if (!this.pending) return null;
    const { sentenceId, start, end } = this.pending;
    this.pending = null;
    try {
      const id = this.session.addEntity(sentenceId, { start, end });
      this.toast("Entity added", "ok");
      this.renderAll();
      return id;
    } catch (error) {
      this.toastError(error);
      this.renderAll();
      return null;
    }
  }

  /** Scripted form of select-then-click used by tests and drag handling. */
  addEntityFromRange(range: Range): number | null {
    this.pending = rangeToSpan(range, this.element("#sentence-list"));
    if (!this.pending) {
      this.toast("Select text inside a single sentence", "error");
      this.renderAddEntityButton();
      return null;
    }
    return this.addPendingEntity();
  }

  deleteEntity(entityId: number): void {
    try {
      this.session.deleteEntity(entityId);
      this.toast("Entity deleted", "ok");
    } catch (error) {
      this.toastError(error);
    }
    this.renderAll();
  }

  // -- step 4: relation annotation -----------------------------------------

  selectPair(sentenceId: number, arg1: number, arg2: number): void {
    this.state.selectedPair = { sentenceId, arg1, arg2 };
    this.renderAll();
  }

  toggleRelation(labelName: string, on: boolean): void {
    const pair = this.state.selectedPair;
    if (!pair) {
      this.toast("Select an entity pair first", "error");
      return;
    }
    try {
      this.session.setRelation(pair.sentenceId, pair.arg1, pair.arg2, labelName, on);
      this.toast(on ? "Relation added" : "Relation removed", "ok");
    } catch (error) {
      this.toastError(error);
    }
    this.renderAll();
  }

  setRelationFilter(query: string): void {
    this.state.relationFilter = query;
    this.renderRelationList();
    this.renderRelationCheckboxes();
  }

  // -- output ---------------------------------------------------------------

  outputText(): string {
    return exportSession(this.session);
  }

  copyOutput(): void {
    const text = this.outputText();
    const clip = this.doc.defaultView?.navigator?.clipboard;
    if (clip?.writeText) {
      void clip.writeText(text).then(
        () => this.toast("Copied", "ok"),
        () => this.toast("Copy failed", "error"),
      );
    } else {
      this.toast("Clipboard unavailable; select the text manually", "error");
    }
  }

  showPage(page: Page): void {
    this.state.activePage = page;
    this.renderAll();
  }

  // -- wiring -----------------------------------------------------------------

  private bindEvents(): void {
    for (const button of this.root.querySelectorAll<HTMLButtonElement>("nav [data-page]")) {
      button.addEventListener("click", () => this.showPage(button.dataset.page as Page));
    }
    this.element("#read-sentences").addEventListener("click", () => this.readSentences());
    this.element("#read-relations").addEventListener("click", () => this.readRelations());
    this.element("#add-entity").addEventListener("click", () => this.addPendingEntity());
    this.element("#sentence-list").addEventListener("mouseup", () => this.captureSelection());

    this.element("#sentence-list").addEventListener("change", (event) => {
      const target = event.target as HTMLInputElement;
      if (target.name === "sentence") {
        this.state.selectedSentence = Number(target.value);
      }
    });

    this.element("#entity-list").addEventListener("click", (event) => {
      const target = (event.target as Element).closest("[data-delete-entity]");
      if (target) this.deleteEntity(Number(target.getAttribute("data-delete-entity")));
    });

    this.element("#pair-list").addEventListener("change", (event) => {
      const target = event.target as HTMLInputElement;
      if (target.name === "pair") {
        const [sentenceId, arg1, arg2] = target.value.split(":").map(Number);
        this.selectPair(sentenceId, arg1, arg2);
      }
    });

    this.element("#relation-checkboxes").addEventListener("change", (event) => {
      const target = event.target as HTMLInputElement;
      if (target.type === "checkbox") this.toggleRelation(target.value, target.checked);
    });

    const onFilter = (event: Event) =>
      this.setRelationFilter((event.target as HTMLInputElement).value);
    this.element("#relation-search").addEventListener("input", onFilter);
    this.element("#annotate-search").addEventListener("input", onFilter);

    this.element("#copy-output").addEventListener("click", () => this.copyOutput());
  }

  private bindUnloadGuard(): void {
    this.doc.defaultView?.addEventListener("beforeunload", (event) => {
      if (!this.session.isEmpty()) {
        event.preventDefault();
        event.returnValue = "";
      }
    });
  }

  // -- rendering ---------------------------------------------------------------

  private renderAll(): void {
    this.validateSelections();
    for (const page of ["sentences", "relations", "annotate", "output"] as Page[]) {
      this.element(`#page-${page}`).classList.toggle("hidden", this.state.activePage !== page);
    }
    this.renderSentenceList();
    this.renderEntityList();
    this.renderAddEntityButton();
    this.renderRelationList();
    this.renderPairList();
    this.renderRelationCheckboxes();
    this.renderOutput();
    this.renderToast();
  }

  /** Drop selections that no longer reference live session objects. */
  private validateSelections(): void {
    const sentence = this.state.selectedSentence;
    if (sentence !== null && (sentence < 0 || sentence >= this.session.sentences.length)) {
      this.state.selectedSentence = null;
    }
    const pair = this.state.selectedPair;
    if (pair && (!this.session.entities.has(pair.arg1) || !this.session.entities.has(pair.arg2))) {
      this.state.selectedPair = null;
    }
  }

  private renderSentenceList(): void {
    const list = this.element("#sentence-list");
    list.textContent = "";
    for (const sentence of this.session.sentences) {
      const item = this.doc.createElement("li");
      item.setAttribute("data-sentence-id", String(sentence.id));
      const radio = this.doc.createElement("input");
      radio.type = "radio";
      radio.name = "sentence";
      radio.value = String(sentence.id);
      radio.checked = this.state.selectedSentence === sentence.id;
      const text = this.doc.createElement("span");
      text.className = "sentence-text";
      text.textContent = sentence.text;
      item.append(radio, text);
      list.append(item);
    }
  }

  private renderEntityList(): void {
    const list = this.element("#entity-list");
    list.textContent = "";
    for (const sentence of this.session.sentences) {
      for (const entity of this.session.entitiesOf(sentence.id)) {
        const item = this.doc.createElement("li");
        const text = this.doc.createElement("span");
        text.textContent = `${entity.text} (s${sentence.id})`;
        const remove = this.doc.createElement("button");
        remove.type = "button";
        remove.textContent = "✕";
        remove.setAttribute("data-delete-entity", String(entity.id));
        item.append(text, remove);
        list.append(item);
      }
    }
  }

  private renderAddEntityButton(): void {
    const button = this.element("#add-entity");
    button.classList.toggle("hidden", this.pending === null);
    button.textContent = this.pending ? `Add as Entity: "${this.pending.text}"` : "Add as Entity";
  }

  private renderRelationList(): void {
    const list = this.element("#relation-list");
    list.textContent = "";
    for (const name of this.session.searchLabels(this.state.relationFilter)) {
      const item = this.doc.createElement("li");
      item.textContent = name;
      list.append(item);
    }
  }

  private renderPairList(): void {
    const list = this.element("#pair-list");
    list.textContent = "";
    const selected = this.state.selectedPair;
    for (const sentence of this.session.sentences) {
      for (const [arg1, arg2] of this.session.entityPairs(sentence.id)) {
        const item = this.doc.createElement("li");
        const radio = this.doc.createElement("input");
        radio.type = "radio";
        radio.name = "pair";
        radio.value = `${sentence.id}:${arg1}:${arg2}`;
        radio.checked =
          selected !== null &&
          selected.sentenceId === sentence.id &&
          selected.arg1 === arg1 &&
          selected.arg2 === arg2;
        const label = this.doc.createElement("span");
        const first = this.session.entities.get(arg1)!;
        const second = this.session.entities.get(arg2)!;
        label.textContent = `⟨${first.text}, ${second.text}⟩ (s${sentence.id})`;
        item.append(radio, label);
        list.append(item);
      }
    }
  }

  private renderRelationCheckboxes(): void {
    const list = this.element("#relation-checkboxes");
    list.textContent = "";
    const pair = this.state.selectedPair;
    const active = pair
      ? this.session.relationNamesFor(pair.sentenceId, pair.arg1, pair.arg2)
      : [];
    for (const name of this.session.searchLabels(this.state.relationFilter)) {
      const item = this.doc.createElement("li");
      const label = this.doc.createElement("label");
      const box = this.doc.createElement("input");
      box.type = "checkbox";
      box.value = name;
      box.checked = active.includes(name);
      box.disabled = pair === null;
      label.append(box, this.doc.createTextNode(` ${name}`));
      item.append(label);
      list.append(item);
    }
  }

  private renderOutput(): void {
    this.element("#output-json").textContent = this.outputText();
  }

  private renderToast(): void {
    const element = this.element("#toast");
    const toast = this.state.toast;
    element.classList.toggle("hidden", toast === null);
    element.className = toast ? `toast ${toast.level}` : "toast hidden";
    element.textContent = toast ? toast.message : "";
  }

  private toast(message: string, level: "ok" | "error"): void {
    this.state.toast = { message, level };
    this.renderToast();
  }

  private toastError(error: unknown): void {
    const message =
      error instanceof AnnotationError ? error.message : "Unexpected error; see console";
    if (!(error instanceof AnnotationError)) console.error(error);
    this.toast(message, "error");
  }

  private element<T extends HTMLElement = HTMLElement>(selector: string): T {
    const found = this.root.querySelector<T>(selector);
    if (!found) throw new Error(`missing UI element ${selector}`);
    return found;
  }
}
