import { App } from "./ui";

const root = document.getElementById("app");
if (root) {
  new App(root);
}
