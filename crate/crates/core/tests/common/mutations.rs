//! One entry per necessary detection condition: the pattern kind, the
//! fixture project (relative to `fixtures/`), and text edits that remove
//! exactly that condition.

use patsum_core::patterns::PatternKind;

pub type Edit = (&'static str, &'static str, &'static str);

pub struct Mutation {
    pub kind: PatternKind,
    pub project: &'static str,
    pub edits: &'static [Edit],
}

pub const MUTATIONS: &[Mutation] = &[
    // singleton: private constructor, static self field, public static accessor
    Mutation { kind: PatternKind::Singleton, project: "positive/singleton", edits: &[("Registry.java", "private Registry()", "public Registry()")] },
    Mutation { kind: PatternKind::Singleton, project: "positive/singleton", edits: &[("Registry.java", "private static Registry instance;", "private Registry instance;")] },
    Mutation { kind: PatternKind::Singleton, project: "positive/singleton", edits: &[("Registry.java", "public static Registry getInstance()", "static Registry getInstance()")] },
    // abstract factory: two creation methods, abstract products, concrete factories
    Mutation { kind: PatternKind::AbstractFactory, project: "corpus/abstract_factory", edits: &[("GUIFactory.java", "    CheckBox createCheckBox();\n", "")] },
    Mutation { kind: PatternKind::AbstractFactory, project: "corpus/abstract_factory", edits: &[("CheckBox.java", "public interface CheckBox {\n    void paint();", "public class CheckBox {\n    public void paint() {}")] },
    Mutation { kind: PatternKind::AbstractFactory, project: "corpus/abstract_factory", edits: &[("GUIFactory.java", "Button createButton();", "String createButton();")] },
    // factory method: abstract creation method, overriding creator returning a product subtype
    Mutation { kind: PatternKind::FactoryMethod, project: "corpus/factory_method", edits: &[("Dialog.java", "public abstract Button createButton();", "public Button createButton() { return null; }")] },
    Mutation { kind: PatternKind::FactoryMethod, project: "corpus/factory_method", edits: &[("HtmlDialog.java", "return new HtmlButton();", "return null;"), ("WindowsDialog.java", "return new WindowsButton();", "return null;")] },
    // adapter: implements target, holds adaptee, calls it from the overriding method
    Mutation { kind: PatternKind::Adapter, project: "corpus/adapter", edits: &[("BusAdapter.java", "implements Car", "")] },
    Mutation { kind: PatternKind::Adapter, project: "corpus/adapter", edits: &[("BusAdapter.java", "private Bus bus;", "private Object bus;")] },
    Mutation { kind: PatternKind::Adapter, project: "corpus/adapter", edits: &[("BusAdapter.java", "bus.run();", "")] },
    // decorator: subtype of component, component field, constructor parameter, delegation
    Mutation { kind: PatternKind::Decorator, project: "positive/decorator", edits: &[("DataSourceDecorator.java", "implements DataSource", "")] },
    Mutation { kind: PatternKind::Decorator, project: "positive/decorator", edits: &[("DataSourceDecorator.java", "private DataSource wrappee;", "private Object wrappee;")] },
    Mutation { kind: PatternKind::Decorator, project: "positive/decorator", edits: &[("DataSourceDecorator.java", "DataSourceDecorator(DataSource source)", "DataSourceDecorator(Object source)")] },
    Mutation { kind: PatternKind::Decorator, project: "positive/decorator", edits: &[("DataSourceDecorator.java", "wrappee.writeData(data);", ""), ("DataSourceDecorator.java", "return wrappee.readData();", "return \"\";")] },
    // facade: two subsystems reached from one public method, no inheritance to them
    Mutation { kind: PatternKind::Facade, project: "positive/facade", edits: &[("HomeTheaterFacade.java", "        projector.on();\n        projector.wideScreenMode();\n        amp.on();\n        amp.setVolume(5);\n", "")] },
    Mutation { kind: PatternKind::Facade, project: "positive/facade", edits: &[("HomeTheaterFacade.java", "public void watchMovie", "void watchMovie")] },
    // memento: immutable or restricted state, originator, caretaker
    Mutation { kind: PatternKind::Memento, project: "corpus/memento", edits: &[("Attribute.java", "    Attribute(String owner", "    public void setOwner(String o) {\n    }\n\n    public Attribute(String owner")] },
    Mutation { kind: PatternKind::Memento, project: "corpus/memento", edits: &[("INode.java", "return new Attribute(owner, group, modificationTime);", "return null;")] },
    Mutation { kind: PatternKind::Memento, project: "corpus/memento", edits: &[("INode.java", "public void restore(Attribute attribute)", "public void restore(Object attribute)")] },
    Mutation { kind: PatternKind::Memento, project: "corpus/memento", edits: &[("DefaultINodeAttributesProvider.java", "public Attribute getAttributes(String[] pathElements, Attribute inodeAttributes)", "public Object getAttributes(String[] pathElements, Object inodeAttributes)")] },
    // observer: subscriber implemented with @Override, publisher collection, notification call
    Mutation { kind: PatternKind::Observer, project: "corpus/observer", edits: &[("EmailNotificationListener.java", "@Override", ""), ("LogOpenListener.java", "@Override", "")] },
    Mutation { kind: PatternKind::Observer, project: "corpus/observer", edits: &[("EventManager.java", "Map<String, List<EventListener>> listeners", "Map<String, List<Object>> listeners")] },
    Mutation { kind: PatternKind::Observer, project: "corpus/observer", edits: &[("EventManager.java", "listener.update(eventType, file);", "")] },
    // visitor: visitor-typed parameter, visit method, element subtypes
    Mutation { kind: PatternKind::Visitor, project: "corpus/visitor", edits: &[("ComputerPart.java", "ComputerPartVisitor computerPartVisitor", "String computerPartVisitor")] },
    Mutation { kind: PatternKind::Visitor, project: "corpus/visitor", edits: &[("ComputerPartVisitor.java", "public void visit(ComputerPart part);", "public void see(ComputerPart part);")] },
    Mutation { kind: PatternKind::Visitor, project: "corpus/visitor", edits: &[("ComputerPartDisplayVisitor.java", "implements ComputerPart", "")] },
];
